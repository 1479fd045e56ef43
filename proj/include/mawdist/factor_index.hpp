#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mawdist/alphabet.hpp"

namespace mawdist {

/// Suffix automaton over one word: the minimal DFA whose states are the
/// right-extension classes of the word's factors. Answers factor-membership
/// queries in O(|u|) and exposes the state graph for minimal-absent-word
/// extraction. Construction is the online algorithm with dense per-state
/// transition rows, O(n * sigma) time and memory. Immutable after
/// construction; concurrent queries are safe.
///
/// State facts used by callers:
///  - state 0 is the initial state (class of the empty word);
///  - longest_length(s) is the length of the longest factor in class s; the
///    shortest has length longest_length(suffix_link(s)) + 1;
///  - occurrence_end(s) is the inclusive end index in text() of one
///    occurrence of every word in class s.
class FactorIndex {
 public:
  /// Throws InputError if `text` uses a symbol outside `alphabet`.
  FactorIndex(std::string_view text, Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::string_view text() const { return text_; }

  /// True iff u is a factor of text(). Words with symbols outside the
  /// alphabet are never factors.
  bool contains(std::string_view u) const;

  std::size_t state_count() const { return len_.size(); }
  int transition(int state, int symbol_rank) const {
    return next_[static_cast<std::size_t>(state) * sigma_ + symbol_rank];
  }
  int suffix_link(int state) const { return link_[state]; }
  int longest_length(int state) const { return len_[state]; }
  int occurrence_end(int state) const { return end_pos_[state]; }

  /// Bytes held by the automaton tables (text and alphabet excluded).
  std::size_t memory_bytes() const;

 private:
  int new_state(int len, int end_pos);
  void extend(int rank, int pos);

  Alphabet alphabet_;
  std::string text_;
  std::size_t sigma_;
  std::vector<std::int32_t> next_;     // state_count * sigma, -1 = none
  std::vector<std::int32_t> len_;
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> end_pos_;
  int last_ = 0;
};

}  // namespace mawdist
