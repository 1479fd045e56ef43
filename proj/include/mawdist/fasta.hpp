#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mawdist/alphabet.hpp"

namespace mawdist {

/// One FASTA record. `id` is the header text up to the first whitespace,
/// `description` the remainder; the sequence body is concatenated with all
/// whitespace removed and letters normalized to upper case.
struct FastaRecord {
  std::string id;
  std::string description;
  std::string sequence;

  bool operator==(const FastaRecord&) const = default;
};

struct FastaParseOptions {
  bool allow_empty = false;               // permit records with empty bodies
  std::optional<Alphabet> alphabet;       // validate bodies when set
  bool skip_invalid = false;              // drop records failing validation
};

/// Parses MultiFASTA. Throws InputError on a missing header, an empty id, a
/// duplicate id, an empty body (unless allowed), or — when an alphabet is
/// configured and skip_invalid is off — a symbol outside the alphabet.
std::vector<FastaRecord> parse_fasta(std::istream& in,
                                     const FastaParseOptions& options = {});

/// Convenience file loader (InputError when the file cannot be read).
std::vector<FastaRecord> parse_fasta_file(const std::string& path,
                                          const FastaParseOptions& options = {});

/// Writes records with bodies wrapped at `line_width` columns. Parsing the
/// output reproduces the records exactly.
void serialize_fasta(std::ostream& out, std::span<const FastaRecord> records,
                     std::size_t line_width = 70);

std::vector<Sequence> to_sequences(std::span<const FastaRecord> records);

}  // namespace mawdist
