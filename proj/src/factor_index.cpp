#include "mawdist/factor_index.hpp"

#include "mawdist/errors.hpp"

namespace mawdist {

FactorIndex::FactorIndex(std::string_view text, Alphabet alphabet)
    : alphabet_(std::move(alphabet)), text_(text), sigma_(alphabet_.size()) {
  alphabet_.require_covers(text_, "index text");
  // at most 2n - 1 states for n >= 2, plus the initial state
  std::size_t cap = 2 * text_.size() + 2;
  next_.reserve(cap * sigma_);
  len_.reserve(cap);
  link_.reserve(cap);
  end_pos_.reserve(cap);
  new_state(0, -1);
  link_[0] = -1;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    extend(alphabet_.rank_of(text_[i]), static_cast<int>(i));
  }
}

int FactorIndex::new_state(int len, int end_pos) {
  len_.push_back(len);
  link_.push_back(0);
  end_pos_.push_back(end_pos);
  next_.insert(next_.end(), sigma_, -1);
  return static_cast<int>(len_.size()) - 1;
}

void FactorIndex::extend(int rank, int pos) {
  int cur = new_state(len_[last_] + 1, pos);
  int p = last_;
  while (p != -1 && transition(p, rank) == -1) {
    next_[static_cast<std::size_t>(p) * sigma_ + rank] = cur;
    p = link_[p];
  }
  if (p == -1) {
    link_[cur] = 0;
  } else {
    int q = transition(p, rank);
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
    } else {
      // split q: the clone owns the transitions and the shorter suffixes
      int clone = new_state(len_[p] + 1, end_pos_[q]);
      std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q) * sigma_,
                  sigma_,
                  next_.begin() + static_cast<std::ptrdiff_t>(clone) * sigma_);
      link_[clone] = link_[q];
      while (p != -1 && transition(p, rank) == q) {
        next_[static_cast<std::size_t>(p) * sigma_ + rank] = clone;
        p = link_[p];
      }
      link_[q] = clone;
      link_[cur] = clone;
    }
  }
  last_ = cur;
}

bool FactorIndex::contains(std::string_view u) const {
  int state = 0;
  for (char c : u) {
    int rank = alphabet_.rank_of(c);
    if (rank < 0) {
      return false;
    }
    state = transition(state, rank);
    if (state < 0) {
      return false;
    }
  }
  return true;
}

std::size_t FactorIndex::memory_bytes() const {
  return next_.size() * sizeof(std::int32_t) +
         (len_.size() + link_.size() + end_pos_.size()) * sizeof(std::int32_t);
}

}  // namespace mawdist
