#pragma once

#include <string>
#include <vector>

namespace ncphase::io {

/// Shortest round-trip decimal rendering of a double (printf %.17g).
std::string format_g17(double v);

/// Writes content to path via a sibling temporary file and an atomic rename,
/// so readers never observe a partially written file.
void write_atomic(const std::string& path, const std::string& content);

/// Minimal tabular record: one header row plus string cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// RFC-4180-style serialization (fields containing commas, quotes or
/// newlines are quoted; embedded quotes doubled). Ends with a newline.
std::string to_csv(const Table& t);

}  // namespace ncphase::io
