#include "mawdist/set_algebra.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "mawdist/errors.hpp"

namespace mawdist {

namespace {

void require_same_alphabet(const WordSet& a, const WordSet& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("word sets are over different alphabets (\"" +
                     a.alphabet().symbols() + "\" vs \"" +
                     b.alphabet().symbols() + "\")");
  }
}

// true iff some proper factor of w (the empty word included) is in `members`
bool has_proper_factor_in(std::string_view w,
                          const std::unordered_set<std::string_view>& members) {
  for (std::size_t len = 0; len < w.size(); ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      if (members.contains(w.substr(i, len))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

WordSet symmetric_difference(const WordSet& a, const WordSet& b) {
  require_same_alphabet(a, b);
  std::vector<std::string> out;
  auto ia = a.begin();
  auto ib = b.begin();
  const Alphabet& alphabet = a.alphabet();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++ia;
      ++ib;
    } else if (alphabet.word_less(*ia, *ib)) {
      out.push_back(*ia++);
    } else {
      out.push_back(*ib++);
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return WordSet(alphabet, std::move(out));
}

WordSet set_union(const WordSet& a, const WordSet& b,
                  bool claimed_antifactorial) {
  require_same_alphabet(a, b);
  std::vector<std::string> out;
  out.reserve(a.card() + b.card());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return WordSet(a.alphabet(), std::move(out), claimed_antifactorial);
}

WordSet directed_d(const FactorIndex& x_index, const MawSet& y_maws) {
  if (!(x_index.alphabet() == y_maws.words.alphabet())) {
    throw InputError("index and MAW set are over different alphabets");
  }
  std::vector<std::string> kept;
  for (const std::string& w : y_maws.words) {
    if (x_index.contains(w)) {
      kept.push_back(w);
    }
  }
  // subset of the antifactorial M(y)
  return WordSet(x_index.alphabet(), std::move(kept), true);
}

PairComparison build_d_set(std::string_view x, std::string_view y,
                           const Alphabet& alphabet, std::string x_id,
                           std::string y_id) {
  FactorIndex x_index(x, alphabet);
  FactorIndex y_index(y, alphabet);
  MawSet x_maws = compute_maws(x_index, x_id);
  MawSet y_maws = compute_maws(y_index, y_id);
  return build_d_set(x_index, x_maws, y_index, y_maws, std::move(x_id),
                     std::move(y_id));
}

PairComparison build_d_set(const FactorIndex& x_index, const MawSet& x_maws,
                           const FactorIndex& y_index, const MawSet& y_maws,
                           std::string x_id, std::string y_id) {
  WordSet d_x_from_y = directed_d(x_index, y_maws);
  WordSet d_y_from_x = directed_d(y_index, x_maws);
  return PairComparison{
      std::move(x_id),
      std::move(y_id),
      symmetric_difference(x_maws.words, y_maws.words),
      d_x_from_y,
      d_y_from_x,
      set_union(d_x_from_y, d_y_from_x, true),
  };
}

bool is_antifactorial(const WordSet& set) {
  std::unordered_set<std::string_view> members(set.begin(), set.end());
  return std::none_of(set.begin(), set.end(), [&](std::string_view w) {
    return has_proper_factor_in(w, members);
  });
}

WordSet antifactorial_base(const WordSet& set) {
  std::unordered_set<std::string_view> members(set.begin(), set.end());
  std::vector<std::string> kept;
  for (const std::string& w : set) {
    if (!has_proper_factor_in(w, members)) {
      kept.push_back(w);
    }
  }
  return WordSet(set.alphabet(), std::move(kept), true);
}

}  // namespace mawdist
