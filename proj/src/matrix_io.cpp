#include "mawdist/matrix_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <vector>

#include "mawdist/errors.hpp"

namespace mawdist {

MatrixFormat matrix_format_from_name(const std::string& name) {
  if (name == "tsv") {
    return MatrixFormat::tsv;
  }
  if (name == "csv") {
    return MatrixFormat::csv;
  }
  if (name == "phylip") {
    return MatrixFormat::phylip;
  }
  throw InputError("unknown matrix format \"" + name + "\"");
}

std::string format_value(double value, int precision) {
  precision = std::clamp(precision, 1, 17);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

void write_matrix(std::ostream& out, const DistanceMatrix& matrix,
                  MatrixFormat format, int precision) {
  const std::size_t k = matrix.size();
  if (format == MatrixFormat::phylip) {
    out << k << '\n';
    for (std::size_t i = 0; i < k; ++i) {
      out << matrix.labels()[i];
      for (std::size_t j = 0; j < k; ++j) {
        out << "  " << format_value(matrix.at(i, j), precision);
      }
      out << '\n';
    }
    return;
  }
  const char sep = format == MatrixFormat::csv ? ',' : '\t';
  for (const std::string& label : matrix.labels()) {
    out << sep << label;
  }
  out << '\n';
  for (std::size_t i = 0; i < k; ++i) {
    out << matrix.labels()[i];
    for (std::size_t j = 0; j < k; ++j) {
      out << sep << format_value(matrix.at(i, j), precision);
    }
    out << '\n';
  }
}

DistanceMatrix read_phylip(std::istream& in, std::string measure_tag) {
  long count = 0;
  if (!(in >> count) || count < 2) {
    throw InputError("PHYLIP matrix must start with a taxon count >= 2");
  }
  const auto k = static_cast<std::size_t>(count);
  std::vector<std::string> labels(k);
  std::vector<double> values(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(in >> labels[i])) {
      throw InputError("PHYLIP matrix truncated at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!(in >> values[i * k + j])) {
        throw InputError("PHYLIP row \"" + labels[i] + "\" is truncated");
      }
    }
  }
  return DistanceMatrix(std::move(labels), std::move(values),
                        std::move(measure_tag));
}

void write_maw_listing(std::ostream& out, std::span<const MawSet> sets) {
  for (const MawSet& set : sets) {
    out << '>' << set.source_id << '\n';
    for (const std::string& w : set.words) {
      out << w << '\n';
    }
  }
}

void write_pair_stats_header(std::ostream& out) {
  out << "#x_id\ty_id\tcard_sym_diff\tcard_d\tcard_ratio\t"
         "s_sym_diff\ts_d\tlength_ratio\n";
}

void write_pair_stats_row(std::ostream& out, const PairComparison& pair,
                          int precision) {
  PairStats stats = pair_stats(pair);
  out << pair.x_id << '\t' << pair.y_id << '\t' << stats.card_sym << '\t'
      << stats.card_d << '\t' << format_value(stats.card_ratio(), precision)
      << '\t' << stats.len_sym << '\t' << stats.len_d << '\t'
      << format_value(stats.length_ratio(), precision) << '\n';
}

}  // namespace mawdist
