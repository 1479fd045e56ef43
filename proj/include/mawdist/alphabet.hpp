#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace mawdist {

/// Ordered set of single-character symbols. The symbol order is fixed at
/// construction and defines the canonical word order used for all
/// deterministic listings: shorter words first, equal lengths broken
/// lexicographically by symbol rank.
class Alphabet {
 public:
  /// Builds an alphabet from the given symbols, kept in the given order.
  /// Throws InputError on an empty list or duplicate symbols.
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(std::size_t rank) const { return symbols_[rank]; }

  bool contains(char c) const { return rank_of(c) >= 0; }

  /// Rank of `c` in symbol order, or -1 if `c` is not a symbol.
  int rank_of(char c) const {
    return ranks_[static_cast<unsigned char>(c)];
  }

  bool covers(std::string_view word) const;

  /// Throws InputError naming `what` if `word` uses a symbol outside the
  /// alphabet.
  void require_covers(std::string_view word, std::string_view what) const;

  /// Canonical word order: length first, then lexicographic by symbol rank.
  /// Symbols outside the alphabet sort after all alphabet symbols, by raw
  /// byte value, so the comparator is a total order on arbitrary strings.
  bool word_less(std::string_view a, std::string_view b) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> ranks_{};
};

/// Taxon record: an identifier and the word it labels.
struct Sequence {
  std::string id;
  std::string word;

  bool operator==(const Sequence&) const = default;
};

/// True iff u occurs in v as a contiguous substring. The empty word is a
/// factor of every word.
inline bool is_factor(std::string_view u, std::string_view v) {
  return v.find(u) != std::string_view::npos;
}

}  // namespace mawdist
