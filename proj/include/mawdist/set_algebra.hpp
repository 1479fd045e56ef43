#pragma once

#include <string>
#include <string_view>

#include "mawdist/factor_index.hpp"
#include "mawdist/maw.hpp"
#include "mawdist/word_set.hpp"

namespace mawdist {

/// Everything one pair (x, y) contributes: the symmetric difference of the
/// two minimal-absent-word sets, both directed reduced sets, and their union
/// d_set — the minimal absent words of one word occurring in the other.
/// d_set is antifactorial, is contained in sym_diff, equals the antifactorial
/// base of sym_diff, and is empty exactly when x = y.
struct PairComparison {
  std::string x_id;
  std::string y_id;
  WordSet sym_diff;     // M(x) symmetric-difference M(y)
  WordSet d_x_from_y;   // F(x) ∩ M(y)
  WordSet d_y_from_x;   // F(y) ∩ M(x)
  WordSet d_set;        // union of the two directed sets
};

/// Elements in exactly one of the two sets. Throws InputError when the
/// alphabets differ.
WordSet symmetric_difference(const WordSet& a, const WordSet& b);

/// Union of two sets over the same alphabet (InputError otherwise).
WordSet set_union(const WordSet& a, const WordSet& b,
                  bool claimed_antifactorial = false);

/// F(x) ∩ M(y): the minimal absent words of y occurring in x, found by
/// factor-membership queries against x's index — F(x) is never materialized.
/// Empty exactly when x is a factor of y.
WordSet directed_d(const FactorIndex& x_index, const MawSet& y_maws);

/// Full pair comparison from raw words: builds both indexes and MAW sets,
/// then assembles all four sets.
PairComparison build_d_set(std::string_view x, std::string_view y,
                           const Alphabet& alphabet, std::string x_id = {},
                           std::string y_id = {});

/// Cache-reusing form: callers computing a whole matrix index each sequence
/// once and fan out over pairs.
PairComparison build_d_set(const FactorIndex& x_index, const MawSet& x_maws,
                           const FactorIndex& y_index, const MawSet& y_maws,
                           std::string x_id = {}, std::string y_id = {});

/// True iff no element is a proper factor of another element.
bool is_antifactorial(const WordSet& set);

/// Removes every word having a proper factor inside the set. For inputs
/// whose ideal base lies within the set itself — in particular any subset of
/// a symmetric difference of two MAW sets — the result generates the same
/// two-sided ideal and is antifactorial. Cost O(sum of squared lengths).
WordSet antifactorial_base(const WordSet& set);

}  // namespace mawdist
