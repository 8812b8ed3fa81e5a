#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ulasan::csv {

// Minimal RFC 4180 reader/writer. UTF-8 payloads, quoted fields with
// embedded commas/quotes/newlines, optional leading BOM, CRLF or LF.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by exact header name.
  std::optional<std::size_t> column(const std::string& name) const;
};

Table read_file(const std::string& path);
Table read_stream(std::istream& in, const std::string& origin);

std::string escape_field(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace ulasan::csv
