#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "ibd/io.hpp"
#include "ibd/selection.hpp"

namespace ibd {

/// Reads a categorical dataset: header row with column names, then one
/// observation per line. Wrong arity or empty values are hard errors
/// reported with their line number.
inline Dataset dataset_from_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    std::vector<std::string> fields = split_csv_row(line, source, line_no);
    if (header.empty()) {
      header = std::move(fields);
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (const std::string& f : fields) {
      if (f.empty()) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": empty value");
      }
    }
    rows.push_back(std::move(fields));
  }
  if (header.empty()) throw ParseError(source + ": missing header row");
  if (rows.empty()) throw ParseError(source + ": no observations");
  try {
    return Dataset(std::move(header), std::move(rows));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline Dataset load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return dataset_from_csv(in, path);
}

}  // namespace ibd
