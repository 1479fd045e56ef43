#include "mawdist/alphabet.hpp"

#include <algorithm>

#include "mawdist/errors.hpp"

namespace mawdist {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) {
    throw InputError("alphabet must contain at least one symbol");
  }
  ranks_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto idx = static_cast<unsigned char>(symbols_[i]);
    if (ranks_[idx] >= 0) {
      throw InputError(std::string("duplicate alphabet symbol '") +
                       symbols_[i] + "'");
    }
    ranks_[idx] = static_cast<std::int16_t>(i);
  }
}

bool Alphabet::covers(std::string_view word) const {
  return std::all_of(word.begin(), word.end(),
                     [this](char c) { return contains(c); });
}

void Alphabet::require_covers(std::string_view word,
                              std::string_view what) const {
  for (char c : word) {
    if (!contains(c)) {
      throw InputError(std::string(what) + ": symbol '" + c +
                       "' is not in alphabet \"" + symbols_ + "\"");
    }
  }
}

bool Alphabet::word_less(std::string_view a, std::string_view b) const {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  // foreign symbols order after all alphabet symbols, by byte value
  auto key = [this](char c) {
    int r = rank_of(c);
    return r >= 0 ? r : 256 + static_cast<unsigned char>(c);
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ka = key(a[i]);
    int kb = key(b[i]);
    if (ka != kb) {
      return ka < kb;
    }
  }
  return false;
}

}  // namespace mawdist
