#include "mawdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mawdist/errors.hpp"

namespace mawdist {

double mu(const WordSet& set) {
  double sum = 0.0;
  for (const std::string& w : set) {
    if (w.empty()) {
      throw InputError("length-weighted index is undefined for the empty word");
    }
    double len = static_cast<double>(w.size());
    sum += 1.0 / (len * len);
  }
  return sum;
}

Rational mu_exact(const WordSet& set) {
  Rational sum;
  for (const std::string& w : set) {
    if (w.empty()) {
      throw InputError("length-weighted index is undefined for the empty word");
    }
    auto len = static_cast<std::int64_t>(w.size());
    sum = sum.plus(Rational::of(1, len * len));
  }
  return sum;
}

std::string measure_tag(Measure measure, std::size_t max_len) {
  switch (measure) {
    case Measure::delta:
      return "delta";
    case Measure::dist:
      return "dist";
    case Measure::dist_l:
      return "dist_l(" + std::to_string(max_len) + ")";
  }
  throw InternalError("unknown measure");
}

double dist(std::string_view x, std::string_view y, const Alphabet& alphabet) {
  MawSet mx = compute_maws(x, alphabet);
  MawSet my = compute_maws(y, alphabet);
  return mu(symmetric_difference(mx.words, my.words));
}

double dist_l(std::string_view x, std::string_view y, const Alphabet& alphabet,
              std::size_t max_len) {
  MawSet mx = filter_by_length(compute_maws(x, alphabet), max_len);
  MawSet my = filter_by_length(compute_maws(y, alphabet), max_len);
  return mu(symmetric_difference(mx.words, my.words));
}

double delta(std::string_view x, std::string_view y, const Alphabet& alphabet) {
  return mu(build_d_set(x, y, alphabet).d_set);
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               std::vector<double> values,
                               std::string measure_tag)
    : labels_(std::move(labels)),
      values_(std::move(values)),
      tag_(std::move(measure_tag)) {
  const std::size_t k = labels_.size();
  if (values_.size() != k * k) {
    throw InputError("matrix has " + std::to_string(values_.size()) +
                     " cells for " + std::to_string(k) + " labels");
  }
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels_) {
      if (label.empty()) {
        throw InputError("matrix label is empty");
      }
      if (!seen.insert(label).second) {
        throw InputError("duplicate matrix label \"" + label + "\"");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double v = values_[i * k + j];
      if (!std::isfinite(v)) {
        throw InputError("matrix entry is not finite");
      }
      if (v < 0.0) {
        throw InputError("negative matrix entry at (" + labels_[i] + ", " +
                         labels_[j] + ")");
      }
    }
  }
  const double slack = 1e-6;
  for (std::size_t i = 0; i < k; ++i) {
    double d = values_[i * k + i];
    if (d > slack) {
      throw InputError("nonzero diagonal entry for \"" + labels_[i] + "\"");
    }
    values_[i * k + i] = 0.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      double a = values_[i * k + j];
      double b = values_[j * k + i];
      if (std::abs(a - b) > slack * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw InputError("matrix is not symmetric at (" + labels_[i] + ", " +
                         labels_[j] + ")");
      }
      double v = a == b ? a : 0.5 * (a + b);
      values_[i * k + j] = v;
      values_[j * k + i] = v;
    }
  }
}

double PairStats::card_ratio() const {
  return card_sym == 0
             ? 0.0
             : static_cast<double>(card_d) / static_cast<double>(card_sym);
}

double PairStats::length_ratio() const {
  return len_sym == 0
             ? 0.0
             : static_cast<double>(len_d) / static_cast<double>(len_sym);
}

PairStats pair_stats(const PairComparison& pair) {
  return PairStats{pair.sym_diff.card(), pair.d_set.card(),
                   pair.sym_diff.total_length(), pair.d_set.total_length()};
}

Alphabet union_alphabet(std::span<const Sequence> sequences) {
  bool present[256] = {};
  for (const Sequence& s : sequences) {
    for (char c : s.word) {
      present[static_cast<unsigned char>(c)] = true;
    }
  }
  std::string symbols;
  for (int c = 0; c < 256; ++c) {
    if (present[c]) {
      symbols.push_back(static_cast<char>(c));
    }
  }
  if (symbols.empty()) {
    // all sequences empty: fall back so M(empty) is still well defined
    throw InputError("cannot infer an alphabet: no symbols observed");
  }
  return Alphabet(symbols);
}

namespace {

// per-sequence caches shared by every pair of the fan-out
struct SequenceCache {
  std::vector<FactorIndex> indexes;
  std::vector<MawSet> maws;
};

SequenceCache build_cache(std::span<const Sequence> sequences,
                          const Alphabet& alphabet) {
  if (sequences.size() < 2) {
    throw InputError("need at least two sequences, got " +
                     std::to_string(sequences.size()));
  }
  std::unordered_set<std::string_view> ids;
  for (const Sequence& s : sequences) {
    if (s.id.empty()) {
      throw InputError("sequence with empty id");
    }
    if (!ids.insert(s.id).second) {
      throw InputError("duplicate sequence id \"" + s.id + "\"");
    }
    alphabet.require_covers(s.word, "sequence \"" + s.id + "\"");
  }
  SequenceCache cache;
  cache.indexes.reserve(sequences.size());
  cache.maws.reserve(sequences.size());
  for (const Sequence& s : sequences) {
    cache.indexes.emplace_back(s.word, alphabet);
    cache.maws.push_back(compute_maws(cache.indexes.back(), s.id));
  }
  return cache;
}

}  // namespace

DistanceMatrix build_matrix(std::span<const Sequence> sequences,
                            Measure measure, const Alphabet& alphabet,
                            std::size_t max_len) {
  if (measure == Measure::dist_l && max_len < 1) {
    throw InputError("dist_l needs a length bound of at least 1");
  }
  SequenceCache cache = build_cache(sequences, alphabet);
  const std::size_t k = sequences.size();

  if (measure == Measure::dist_l) {
    for (MawSet& m : cache.maws) {
      m = filter_by_length(m, max_len);
    }
  }

  std::vector<double> values(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double v = 0.0;
      switch (measure) {
        case Measure::dist:
        case Measure::dist_l:
          v = mu(symmetric_difference(cache.maws[i].words,
                                      cache.maws[j].words));
          break;
        case Measure::delta: {
          WordSet d_ij = directed_d(cache.indexes[i], cache.maws[j]);
          WordSet d_ji = directed_d(cache.indexes[j], cache.maws[i]);
          v = mu(set_union(d_ij, d_ji, true));
          break;
        }
      }
      values[i * k + j] = v;
      values[j * k + i] = v;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const Sequence& s : sequences) {
    labels.push_back(s.id);
  }
  return DistanceMatrix(std::move(labels), std::move(values),
                        measure_tag(measure, max_len));
}

RatioReport build_ratio_report(std::span<const Sequence> sequences,
                               const Alphabet& alphabet) {
  const std::size_t k = sequences.size();
  std::vector<double> card_values(k * k, 0.0);
  std::vector<double> length_values(k * k, 0.0);
  std::size_t next = 0;
  std::vector<PairComparison> pairs = all_pair_comparisons(sequences, alphabet);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PairStats stats = pair_stats(pairs[next++]);
      card_values[i * k + j] = card_values[j * k + i] = stats.card_ratio();
      length_values[i * k + j] = length_values[j * k + i] =
          stats.length_ratio();
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const Sequence& s : sequences) {
    labels.push_back(s.id);
  }
  std::vector<std::string> labels_copy = labels;
  return RatioReport{
      DistanceMatrix(std::move(labels), std::move(card_values), "card_ratio"),
      DistanceMatrix(std::move(labels_copy), std::move(length_values),
                     "length_ratio"),
  };
}

std::vector<PairComparison> all_pair_comparisons(
    std::span<const Sequence> sequences, const Alphabet& alphabet) {
  SequenceCache cache = build_cache(sequences, alphabet);
  std::vector<PairComparison> pairs;
  pairs.reserve(sequences.size() * (sequences.size() - 1) / 2);
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    for (std::size_t j = i + 1; j < sequences.size(); ++j) {
      pairs.push_back(build_d_set(cache.indexes[i], cache.maws[i],
                                  cache.indexes[j], cache.maws[j],
                                  sequences[i].id, sequences[j].id));
    }
  }
  return pairs;
}

}  // namespace mawdist
