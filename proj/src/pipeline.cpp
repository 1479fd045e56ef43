#include "mawdist/pipeline.hpp"

#include <cctype>

#include "mawdist/errors.hpp"

namespace mawdist {

TreeMethod tree_method_from_name(const std::string& name) {
  if (name == "upgma") {
    return TreeMethod::upgma;
  }
  if (name == "nj") {
    return TreeMethod::nj;
  }
  if (name == "none") {
    return TreeMethod::none;
  }
  throw InputError("unknown tree method \"" + name + "\"");
}

Measure measure_from_name(const std::string& name) {
  if (name == "delta") {
    return Measure::delta;
  }
  if (name == "dist") {
    return Measure::dist;
  }
  if (name == "distl") {
    return Measure::dist_l;
  }
  throw InputError("unknown measure \"" + name + "\"");
}

void RunConfig::validate() const {
  if (precision < 1 || precision > 17) {
    throw InputError("precision must be in [1, 17], got " +
                     std::to_string(precision));
  }
  if (measure == Measure::dist_l && max_len < 1) {
    throw InputError("measure distl needs --maxlen >= 1");
  }
  if (alphabet_override && alphabet_override->empty()) {
    throw InputError("alphabet override must not be empty");
  }
}

LoadedInput load_fasta_input(const std::string& path,
                             const RunConfig& config) {
  config.validate();
  std::optional<Alphabet> alphabet;
  if (config.alphabet_override) {
    std::string symbols;
    for (char c : *config.alphabet_override) {
      symbols.push_back(
          static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    alphabet = Alphabet(symbols);
  }
  FastaParseOptions options;
  options.allow_empty = config.allow_empty;
  options.alphabet = alphabet;
  options.skip_invalid = config.skip_invalid;
  std::vector<FastaRecord> records = parse_fasta_file(path, options);
  if (records.empty()) {
    throw InputError("no records left after filtering \"" + path + "\"");
  }
  std::vector<Sequence> sequences = to_sequences(records);
  if (!alphabet) {
    alphabet = union_alphabet(sequences);
  }
  return LoadedInput{std::move(sequences), std::move(*alphabet)};
}

DistanceMatrix compute_matrix(std::span<const Sequence> sequences,
                              const Alphabet& alphabet,
                              const RunConfig& config) {
  return build_matrix(sequences, config.measure, alphabet, config.max_len);
}

PhyloTree build_tree(const DistanceMatrix& matrix, TreeMethod method) {
  switch (method) {
    case TreeMethod::upgma:
      return upgma(matrix);
    case TreeMethod::nj:
      return neighbor_joining(matrix);
    case TreeMethod::none:
      break;
  }
  throw InputError("no tree method selected");
}

}  // namespace mawdist
