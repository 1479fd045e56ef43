#include "mawdist/fasta.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "mawdist/errors.hpp"

namespace mawdist {

namespace {

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FastaRecord> parse_fasta(std::istream& in,
                                     const FastaParseOptions& options) {
  std::vector<FastaRecord> records;
  std::unordered_set<std::string> ids;
  FastaRecord current;
  bool in_record = false;

  auto finish = [&]() {
    if (!in_record) {
      return;
    }
    if (current.sequence.empty() && !options.allow_empty) {
      throw InputError("record \"" + current.id + "\" has an empty sequence");
    }
    if (options.alphabet && !options.alphabet->covers(current.sequence)) {
      if (options.skip_invalid) {
        ids.erase(current.id);
        current = {};
        return;
      }
      options.alphabet->require_covers(current.sequence,
                                       "record \"" + current.id + "\"");
    }
    records.push_back(std::move(current));
    current = {};
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || blank(line)) {
      continue;
    }
    if (line.front() == '>') {
      finish();
      std::string header = line.substr(1);
      std::size_t split = header.find_first_of(" \t");
      current.id = header.substr(0, split);
      if (split != std::string::npos) {
        std::size_t rest = header.find_first_not_of(" \t", split);
        current.description =
            rest == std::string::npos ? "" : header.substr(rest);
      }
      if (current.id.empty()) {
        throw InputError("FASTA header with empty id");
      }
      if (!ids.insert(current.id).second) {
        throw InputError("duplicate FASTA id \"" + current.id + "\"");
      }
      in_record = true;
    } else {
      if (!in_record) {
        throw InputError("FASTA input does not start with a '>' header");
      }
      for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          continue;
        }
        current.sequence.push_back(
            static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      }
    }
  }
  if (!in_record) {
    throw InputError("FASTA input contains no records");
  }
  finish();
  return records;
}

std::vector<FastaRecord> parse_fasta_file(const std::string& path,
                                          const FastaParseOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open \"" + path + "\"");
  }
  return parse_fasta(in, options);
}

void serialize_fasta(std::ostream& out, std::span<const FastaRecord> records,
                     std::size_t line_width) {
  for (const FastaRecord& r : records) {
    out << '>' << r.id;
    if (!r.description.empty()) {
      out << ' ' << r.description;
    }
    out << '\n';
    for (std::size_t pos = 0; pos < r.sequence.size(); pos += line_width) {
      out << std::string_view(r.sequence).substr(pos, line_width) << '\n';
    }
  }
}

std::vector<Sequence> to_sequences(std::span<const FastaRecord> records) {
  std::vector<Sequence> sequences;
  sequences.reserve(records.size());
  for (const FastaRecord& r : records) {
    sequences.push_back(Sequence{r.id, r.sequence});
  }
  return sequences;
}

}  // namespace mawdist
