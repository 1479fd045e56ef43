#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mawdist/fasta.hpp"
#include "mawdist/matrix_io.hpp"
#include "mawdist/measures.hpp"
#include "mawdist/phylogeny.hpp"

namespace mawdist {

enum class TreeMethod { none, upgma, nj };

TreeMethod tree_method_from_name(const std::string& name);
Measure measure_from_name(const std::string& name);

/// Everything the command surface configures. Flags map onto these fields
/// one to one; validate() enforces the cross-field rules.
struct RunConfig {
  std::optional<std::string> alphabet_override;  // e.g. "ACGT"
  Measure measure = Measure::delta;
  std::size_t max_len = 0;          // dist_l bound / listing filter
  TreeMethod tree = TreeMethod::none;
  MatrixFormat format = MatrixFormat::tsv;
  int precision = 6;                // significant digits, 1..17
  std::size_t oracle_cap = 64;      // brute-force route refusal bound
  bool skip_invalid = false;        // drop records failing alphabet checks
  bool allow_empty = false;         // permit empty sequences
  bool include_lengths = true;      // branch lengths in Newick output
  bool ascii = false;               // ASCII rendering instead of Newick

  void validate() const;            // InputError on violations
};

struct LoadedInput {
  std::vector<Sequence> sequences;
  Alphabet alphabet;
};

/// Parses FASTA and resolves the working alphabet: the override when given
/// (normalized to upper case, matching sequence ingestion), otherwise the
/// union of observed symbols across all records.
LoadedInput load_fasta_input(const std::string& path, const RunConfig& config);

/// Matrix of the configured measure over the loaded sequences.
DistanceMatrix compute_matrix(std::span<const Sequence> sequences,
                              const Alphabet& alphabet,
                              const RunConfig& config);

/// Throws InputError for TreeMethod::none.
PhyloTree build_tree(const DistanceMatrix& matrix, TreeMethod method);

}  // namespace mawdist
