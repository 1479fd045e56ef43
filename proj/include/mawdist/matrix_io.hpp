#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "mawdist/maw.hpp"
#include "mawdist/measures.hpp"

namespace mawdist {

enum class MatrixFormat { tsv, csv, phylip };

MatrixFormat matrix_format_from_name(const std::string& name);

/// Formats with %.*g at the given significant digits (clamped to [1, 17]).
std::string format_value(double value, int precision);

/// TSV/CSV: header row of labels, then one row per taxon led by its label.
/// PHYLIP: taxon count line, then label + row values (square layout).
void write_matrix(std::ostream& out, const DistanceMatrix& matrix,
                  MatrixFormat format, int precision = 6);

/// Reads a square PHYLIP matrix (labels may be followed by wrapped value
/// lines; tokens are whitespace-separated). Throws InputError on malformed
/// input, asymmetry, or negative entries.
DistanceMatrix read_phylip(std::istream& in,
                           std::string measure_tag = "loaded");

/// One `>id` header per record followed by its words in canonical order.
void write_maw_listing(std::ostream& out, std::span<const MawSet> sets);

/// Per-pair statistics rows:
/// x_id, y_id, Card(sym_diff), Card(D), card_ratio, s(sym_diff), s(D),
/// length_ratio — tab separated, one header line first.
void write_pair_stats_header(std::ostream& out);
void write_pair_stats_row(std::ostream& out, const PairComparison& pair,
                          int precision = 6);

}  // namespace mawdist
