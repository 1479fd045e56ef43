#include "mawdist/word_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "mawdist/errors.hpp"

namespace mawdist {

WordSet::WordSet(Alphabet alphabet, std::vector<std::string> words,
                 bool claimed_antifactorial)
    : alphabet_(std::move(alphabet)),
      words_(std::move(words)),
      claimed_antifactorial_(claimed_antifactorial) {
  for (const auto& w : words_) {
    alphabet_.require_covers(w, "word set element");
  }
  std::sort(words_.begin(), words_.end(),
            [this](std::string_view a, std::string_view b) {
              return alphabet_.word_less(a, b);
            });
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  for (const auto& w : words_) {
    total_length_ += w.size();
  }
}

bool WordSet::contains(std::string_view word) const {
  return std::binary_search(words_.begin(), words_.end(), word,
                            [this](std::string_view a, std::string_view b) {
                              return alphabet_.word_less(a, b);
                            });
}

WordSet factors(std::string_view v, const Alphabet& alphabet) {
  alphabet.require_covers(v, "factors");
  std::unordered_set<std::string_view> seen;
  std::vector<std::string> out;
  out.emplace_back();  // the empty word
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t len = 1; i + len <= v.size(); ++len) {
      if (seen.insert(v.substr(i, len)).second) {
        out.emplace_back(v.substr(i, len));
      }
    }
  }
  return WordSet(alphabet, std::move(out));
}

}  // namespace mawdist
