#pragma once

#include <string>
#include <string_view>

#include "mawdist/factor_index.hpp"
#include "mawdist/word_set.hpp"

namespace mawdist {

/// M(v) for one word: every element is absent from the source word while all
/// of its proper factors occur. Always antifactorial; element lengths are at
/// most |v| + 1. `source_id` carries the record label when known.
struct MawSet {
  WordSet words;
  std::string source_id;
};

/// M(v) over the given alphabet. The alphabet is an explicit parameter and is
/// never inferred from v: a symbol of the alphabet that does not occur in v
/// is itself a (length-1) minimal absent word. M of the empty word is the
/// whole alphabet. Throws InputError if v uses a symbol outside the alphabet.
MawSet compute_maws(std::string_view v, const Alphabet& alphabet,
                    std::string source_id = {});

/// Same, reusing an already-built index.
MawSet compute_maws(const FactorIndex& index, std::string source_id = {});

/// Independent brute-force route: enumerates one-symbol left extensions of
/// the materialized factor set and keeps the words whose longest proper
/// prefix and suffix both occur. Quadratic; refuses words longer than
/// `size_cap` (InputError). Testing support only — shares no code with the
/// indexed path.
MawSet compute_maws_oracle(std::string_view v, const Alphabet& alphabet,
                           std::size_t size_cap = 64);

/// M_l: the subset of words with length <= max_len (which is antifactorial
/// again). Throws InputError when max_len < 1.
MawSet filter_by_length(const MawSet& maws, std::size_t max_len);

}  // namespace mawdist
