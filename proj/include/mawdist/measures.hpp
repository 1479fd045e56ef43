#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawdist/rational.hpp"
#include "mawdist/set_algebra.hpp"
#include "mawdist/word_set.hpp"

namespace mawdist {

/// Length-weighted index: sum of 1/|w|^2 over the set, accumulated in
/// canonical word order so results are bit-reproducible. Throws InputError
/// if the set contains the empty word.
double mu(const WordSet& set);

/// Exact-rational accumulation of the same sum, for golden-value checks.
Rational mu_exact(const WordSet& set);

enum class Measure { delta, dist, dist_l };

/// Tag string: "delta", "dist", or "dist_l(L)".
std::string measure_tag(Measure measure, std::size_t max_len = 0);

/// mu over M(x) symmetric-difference M(y).
double dist(std::string_view x, std::string_view y, const Alphabet& alphabet);

/// mu over M_l(x) symmetric-difference M_l(y): both MAW sets are truncated
/// to words of length <= max_len before differencing.
double dist_l(std::string_view x, std::string_view y, const Alphabet& alphabet,
              std::size_t max_len);

/// mu over the reduced set d(x,y); zero exactly when x = y, and never larger
/// than dist(x, y).
double delta(std::string_view x, std::string_view y, const Alphabet& alphabet);

/// Labeled symmetric nonnegative matrix with zero diagonal. Construction
/// validates shape, symmetry (within 1e-6 absolute-relative slack, to admit
/// matrices re-read from rounded files), sign, and diagonal, then stores an
/// exactly symmetric copy. Throws InputError on violations.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> values,
                 std::string measure_tag);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(std::size_t i, std::size_t j) const {
    return values_[i * labels_.size() + j];
  }
  const std::string& tag() const { return tag_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;  // row-major
  std::string tag_;
};

/// Per-pair size statistics of the reduced set against the symmetric
/// difference.
struct PairStats {
  std::size_t card_sym = 0;
  std::size_t card_d = 0;
  std::uint64_t len_sym = 0;
  std::uint64_t len_d = 0;

  double card_ratio() const;
  double length_ratio() const;
};

PairStats pair_stats(const PairComparison& pair);

/// Card and total-length ratio matrices over all pairs; diagonal entries are
/// fixed at zero by convention, as is any pair with an empty symmetric
/// difference (identical sequences).
struct RatioReport {
  DistanceMatrix card_ratios;
  DistanceMatrix length_ratios;
};

/// Alphabet holding the union of symbols observed across the sequences, in
/// ascending byte order.
Alphabet union_alphabet(std::span<const Sequence> sequences);

/// Pairwise matrix of the chosen measure. Every sequence is indexed once and
/// its MAW set computed once; pairs reuse the caches. Requires at least two
/// sequences, unique ids, an alphabet covering every sequence, and
/// max_len >= 1 when the measure is dist_l. Throws InputError otherwise.
DistanceMatrix build_matrix(std::span<const Sequence> sequences,
                            Measure measure, const Alphabet& alphabet,
                            std::size_t max_len = 0);

/// Ratio matrices over the same cached pipeline (same preconditions).
RatioReport build_ratio_report(std::span<const Sequence> sequences,
                               const Alphabet& alphabet);

/// Every unordered pair (i < j in input order), fully compared, with the
/// per-sequence index/MAW work shared across pairs.
std::vector<PairComparison> all_pair_comparisons(
    std::span<const Sequence> sequences, const Alphabet& alphabet);

}  // namespace mawdist
