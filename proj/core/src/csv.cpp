#include "ulasan/csv.hpp"

#include <fstream>
#include <sstream>

#include "ulasan/errors.hpp"

namespace ulasan::csv {

std::optional<std::size_t> Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::string>> parse(std::istream& in,
                                            const std::string& origin) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool record_started = false;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
    record_started = false;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_started) {
          in_quotes = true;
          field_started = true;
          record_started = true;
        } else {
          field += c;  // stray quote inside unquoted field, keep verbatim
        }
        break;
      case ',':
        end_field();
        record_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (record_started || field_started || !fields.empty() || !field.empty()) {
          end_record();
        }
        break;
      default:
        field += c;
        field_started = true;
        record_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw DataError(origin + ": unterminated quoted field at end of file");
  }
  if (record_started || !field.empty() || !fields.empty()) {
    end_record();
  }
  return records;
}

}  // namespace

Table read_stream(std::istream& in, const std::string& origin) {
  // Strip a UTF-8 BOM if present.
  if (in.peek() == 0xEF) {
    char bom[3];
    in.read(bom, 3);
    if (in.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
      throw DataError(origin + ": malformed byte order mark");
    }
  }
  auto records = parse(in, origin);
  if (records.empty()) {
    throw DataError(origin + ": missing header row");
  }
  Table t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  return read_stream(in, path);
}

std::string escape_field(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape_field(fields[i]);
  }
  out << '\n';
}

}  // namespace ulasan::csv
