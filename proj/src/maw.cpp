#include "mawdist/maw.hpp"

#include <string>
#include <vector>

#include "mawdist/errors.hpp"

namespace mawdist {

MawSet compute_maws(std::string_view v, const Alphabet& alphabet,
                    std::string source_id) {
  FactorIndex index(v, alphabet);
  return compute_maws(index, std::move(source_id));
}

// A word w of length >= 2 is minimal absent iff w = p·b where p is the
// shortest factor of its automaton class q and b extends the class of
// suffix_link(q) but not q itself: removing the last symbol of w gives
// p (a factor), removing the first gives the longest word of link(q)
// extended by b (a factor), while w itself leaves the automaton. Factors
// longer than the class minimum share their right extensions with their
// one-shorter suffix, so they can never spawn a minimal absent word.
// Length-1 minimal absent words are the symbols with no transition from
// the initial state. No word arises twice: classes partition the factors,
// so class minima are pairwise distinct.
MawSet compute_maws(const FactorIndex& index, std::string source_id) {
  const Alphabet& alphabet = index.alphabet();
  const int sigma = static_cast<int>(alphabet.size());
  std::string_view text = index.text();

  std::vector<std::string> found;
  for (int rank = 0; rank < sigma; ++rank) {
    if (index.transition(0, rank) < 0) {
      found.emplace_back(1, alphabet.symbol(rank));
    }
  }
  const int states = static_cast<int>(index.state_count());
  std::string word;
  for (int q = 1; q < states; ++q) {
    const int parent = index.suffix_link(q);
    const int shortest_len = index.longest_length(parent) + 1;
    const int begin = index.occurrence_end(q) - shortest_len + 1;
    for (int rank = 0; rank < sigma; ++rank) {
      if (index.transition(q, rank) < 0 && index.transition(parent, rank) >= 0) {
        word.assign(text.substr(begin, shortest_len));
        word.push_back(alphabet.symbol(rank));
        found.push_back(word);
      }
    }
  }
  return MawSet{WordSet(alphabet, std::move(found), true),
                std::move(source_id)};
}

MawSet compute_maws_oracle(std::string_view v, const Alphabet& alphabet,
                           std::size_t size_cap) {
  if (v.size() > size_cap) {
    throw InputError("oracle input of length " + std::to_string(v.size()) +
                     " exceeds the size cap " + std::to_string(size_cap));
  }
  WordSet factor_set = factors(v, alphabet);
  std::vector<std::string> found;
  for (char a : alphabet.symbols()) {
    for (const std::string& f : factor_set) {
      std::string candidate;
      candidate.reserve(f.size() + 1);
      candidate.push_back(a);
      candidate.append(f);
      if (factor_set.contains(candidate)) {
        continue;
      }
      std::string_view w = candidate;
      bool prefix_occurs = factor_set.contains(w.substr(0, w.size() - 1));
      bool suffix_occurs = factor_set.contains(w.substr(1));
      if (w.size() == 1 || (prefix_occurs && suffix_occurs)) {
        found.push_back(std::move(candidate));
      }
    }
  }
  return MawSet{WordSet(alphabet, std::move(found), true), {}};
}

MawSet filter_by_length(const MawSet& maws, std::size_t max_len) {
  if (max_len < 1) {
    throw InputError("length filter bound must be at least 1");
  }
  std::vector<std::string> kept;
  for (const std::string& w : maws.words) {
    if (w.size() <= max_len) {
      kept.push_back(w);
    }
  }
  return MawSet{WordSet(maws.words.alphabet(), std::move(kept), true),
                maws.source_id};
}

}  // namespace mawdist
