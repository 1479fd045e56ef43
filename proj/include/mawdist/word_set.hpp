#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawdist/alphabet.hpp"

namespace mawdist {

/// Finite set of distinct words over a common alphabet, stored in canonical
/// order (length, then lexicographic by symbol rank). Immutable after
/// construction; safe to share across concurrent readers.
///
/// `claimed_antifactorial` records that the producer guarantees no element is
/// a proper factor of another. The claim is not verified here (that is
/// is_antifactorial's job); subsets of antifactorial sets keep the claim.
class WordSet {
 public:
  /// Sorts canonically, drops duplicates, and validates every symbol against
  /// the alphabet (InputError otherwise).
  WordSet(Alphabet alphabet, std::vector<std::string> words,
          bool claimed_antifactorial = false);

  static WordSet empty_set(Alphabet alphabet) {
    return WordSet(std::move(alphabet), {});
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const std::string> words() const { return words_; }

  /// Card(X): number of elements.
  std::size_t card() const { return words_.size(); }

  /// s(X): sum of element lengths.
  std::uint64_t total_length() const { return total_length_; }

  bool contains(std::string_view word) const;
  bool claimed_antifactorial() const { return claimed_antifactorial_; }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  /// Same alphabet and same elements (the claim flag is metadata and does
  /// not participate).
  bool operator==(const WordSet& other) const {
    return alphabet_ == other.alphabet_ && words_ == other.words_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::string> words_;
  std::uint64_t total_length_ = 0;
  bool claimed_antifactorial_ = false;
};

/// F(v): every factor of v including the empty word and v itself.
/// Materializes O(|v|^2) strings; intended for desk-scale words and oracle
/// use. Indexed paths use FactorIndex instead.
WordSet factors(std::string_view v, const Alphabet& alphabet);

}  // namespace mawdist
