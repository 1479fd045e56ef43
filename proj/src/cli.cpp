#include "mawdist/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mawdist/errors.hpp"
#include "mawdist/pipeline.hpp"

namespace mawdist {

namespace {

struct CliState {
  RunConfig config;
  std::string input;
  std::string output;
  std::string matrix_out;
  std::string measure_name = "delta";
  std::string tree_name;
  std::string format_name = "tsv";
  std::string alphabet;
  bool use_oracle = false;
  bool from_matrix = false;
  bool topology_only = false;
};

void finalize_config(CliState& state) {
  if (!state.alphabet.empty()) {
    state.config.alphabet_override = state.alphabet;
  }
  state.config.measure = measure_from_name(state.measure_name);
  state.config.format = matrix_format_from_name(state.format_name);
  if (!state.tree_name.empty()) {
    state.config.tree = tree_method_from_name(state.tree_name);
  }
  state.config.include_lengths = !state.topology_only;
  state.config.validate();
}

// routes subcommand output to --output or the session stream
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw InputError("cannot write \"" + path + "\"");
  }
  write(file);
}

void add_common_options(CLI::App* cmd, CliState& state) {
  cmd->add_option("input", state.input, "input file")->required();
  cmd->add_option("--alphabet", state.alphabet,
                  "explicit alphabet symbols (e.g. ACGT); default: union of "
                  "observed symbols");
  cmd->add_option("--output", state.output, "write results here (default: stdout)");
  cmd->add_option("--precision", state.config.precision,
                  "significant digits for printed values (1-17)");
  cmd->add_flag("--skip-invalid", state.config.skip_invalid,
                "drop records with symbols outside the alphabet");
  cmd->add_flag("--allow-empty", state.config.allow_empty,
                "accept records with empty sequences");
}

void run_maw(CliState& state, std::ostream& out) {
  LoadedInput loaded = load_fasta_input(state.input, state.config);
  std::vector<MawSet> sets;
  sets.reserve(loaded.sequences.size());
  for (const Sequence& s : loaded.sequences) {
    MawSet maws = state.use_oracle
                      ? compute_maws_oracle(s.word, loaded.alphabet,
                                            state.config.oracle_cap)
                      : compute_maws(s.word, loaded.alphabet, s.id);
    maws.source_id = s.id;
    if (state.config.max_len > 0) {
      maws = filter_by_length(maws, state.config.max_len);
    }
    sets.push_back(std::move(maws));
  }
  with_output(state.output, out, [&](std::ostream& o) {
    write_maw_listing(o, sets);
  });
}

void run_dist(CliState& state, std::ostream& out) {
  LoadedInput loaded = load_fasta_input(state.input, state.config);
  DistanceMatrix matrix =
      compute_matrix(loaded.sequences, loaded.alphabet, state.config);
  with_output(state.output, out, [&](std::ostream& o) {
    write_matrix(o, matrix, state.config.format, state.config.precision);
  });
}

void run_tree(CliState& state, std::ostream& out) {
  std::optional<DistanceMatrix> matrix;
  if (state.from_matrix) {
    std::ifstream in(state.input);
    if (!in) {
      throw InputError("cannot open \"" + state.input + "\"");
    }
    matrix = read_phylip(in);
  } else {
    LoadedInput loaded = load_fasta_input(state.input, state.config);
    matrix = compute_matrix(loaded.sequences, loaded.alphabet, state.config);
  }
  if (!state.matrix_out.empty()) {
    with_output(state.matrix_out, out, [&](std::ostream& o) {
      write_matrix(o, *matrix, state.config.format, state.config.precision);
    });
  }
  PhyloTree tree = build_tree(*matrix, state.config.tree);
  with_output(state.output, out, [&](std::ostream& o) {
    if (state.config.ascii) {
      o << render_ascii(tree, state.config.precision);
    } else {
      o << to_newick(tree, state.config.include_lengths,
                     state.config.precision)
        << '\n';
    }
  });
}

void run_compare(CliState& state, std::ostream& out) {
  LoadedInput loaded = load_fasta_input(state.input, state.config);
  std::vector<PairComparison> pairs =
      all_pair_comparisons(loaded.sequences, loaded.alphabet);
  with_output(state.output, out, [&](std::ostream& o) {
    write_pair_stats_header(o);
    for (const PairComparison& pair : pairs) {
      write_pair_stats_row(o, pair, state.config.precision);
    }
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"minimal-absent-word distances, ratio reports, and "
               "phylogenies from FASTA input"};
  app.require_subcommand(1);

  CliState state;

  CLI::App* maw_cmd = app.add_subcommand(
      "maw", "list each record's minimal absent words");
  add_common_options(maw_cmd, state);
  maw_cmd->add_option("--maxlen", state.config.max_len,
                      "keep only words of length <= L");
  maw_cmd->add_flag("--oracle", state.use_oracle,
                    "use the brute-force route (small inputs only)");
  maw_cmd->add_option("--oracle-cap", state.config.oracle_cap,
                      "refusal bound for --oracle");

  CLI::App* dist_cmd =
      app.add_subcommand("dist", "pairwise distance matrix");
  add_common_options(dist_cmd, state);
  dist_cmd->add_option("--measure", state.measure_name,
                       "delta | dist | distl")
      ->check(CLI::IsMember({"delta", "dist", "distl"}));
  dist_cmd->add_option("--maxlen", state.config.max_len,
                       "length bound for distl");
  dist_cmd->add_option("--format", state.format_name, "tsv | csv | phylip")
      ->check(CLI::IsMember({"tsv", "csv", "phylip"}));

  CLI::App* tree_cmd = app.add_subcommand(
      "tree", "reconstruct a phylogeny (from FASTA or a PHYLIP matrix)");
  add_common_options(tree_cmd, state);
  tree_cmd->add_option("--tree", state.tree_name, "upgma | nj")
      ->check(CLI::IsMember({"upgma", "nj"}))
      ->required();
  tree_cmd->add_option("--measure", state.measure_name,
                       "delta | dist | distl")
      ->check(CLI::IsMember({"delta", "dist", "distl"}));
  tree_cmd->add_option("--maxlen", state.config.max_len,
                       "length bound for distl");
  tree_cmd->add_flag("--from-matrix", state.from_matrix,
                     "input is a square PHYLIP matrix, not FASTA");
  tree_cmd->add_option("--matrix-out", state.matrix_out,
                       "also write the distance matrix here");
  tree_cmd->add_option("--format", state.format_name,
                       "matrix format for --matrix-out")
      ->check(CLI::IsMember({"tsv", "csv", "phylip"}));
  tree_cmd->add_flag("--topology-only", state.topology_only,
                     "omit branch lengths from Newick output");
  tree_cmd->add_flag("--ascii", state.config.ascii,
                     "render the tree as ASCII art instead of Newick");

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "per-pair reduced-set vs symmetric-difference statistics");
  add_common_options(compare_cmd, state);

  try {
    std::vector<const char*> argv;
    argv.push_back("mawdist");
    for (const std::string& a : args) {
      argv.push_back(a.c_str());
    }
    app.parse(static_cast<int>(argv.size()), argv.data());

    finalize_config(state);
    if (maw_cmd->parsed()) {
      run_maw(state, out);
    } else if (dist_cmd->parsed()) {
      run_dist(state, out);
    } else if (tree_cmd->parsed()) {
      run_tree(state, out);
    } else if (compare_cmd->parsed()) {
      run_compare(state, out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace mawdist
