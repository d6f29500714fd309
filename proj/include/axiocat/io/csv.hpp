#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "axiocat/linalg.hpp"

namespace axiocat {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 fields: commas, double-quoted fields with "" escapes, LF or CRLF.
/// Blank lines are skipped. Every row must have as many fields as the header.
inline CsvTable parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  std::size_t line = 1;
  auto end_record = [&] {
    if (field_started || !record.empty()) {
      record.push_back(field);
      records.push_back(std::move(record));
    }
    record.clear();
    field.clear();
    field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty()) throw DomainError("csv line " + std::to_string(line) + ": quote inside an unquoted field");
        quoted = field_started = true;
        break;
      case ',':
        record.push_back(field);
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(ch);
        field_started = true;
    }
  }
  if (quoted) throw DomainError("csv: unterminated quoted field");
  end_record();
  if (records.empty()) throw ShapeError("csv: no header row");
  CsvTable t{records.front(), {}};
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size())
      throw ShapeError("csv row " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                       " fields, header has " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(read_text_file(path)); }

/// Writes to a sibling temporary file, then renames over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw DomainError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw DomainError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

inline std::optional<double> parse_number(const std::string& field) {
  const auto first = field.find_first_not_of(" \t");
  if (first == std::string::npos) return std::nullopt;
  const auto last = field.find_last_not_of(" \t");
  const char* b = field.data() + first;
  const char* e = field.data() + last + 1;
  if (*b == '+') ++b;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) return std::nullopt;
  return v;
}

/// Round-trip decimal with 17 significant digits.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

inline std::string to_csv(const CsvTable& t) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out.push_back(',');
      out += csv_field(fields[i]);
    }
    out.push_back('\n');
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

inline CsvTable matrix_table(const std::vector<std::string>& header, const Matrix& m) {
  if (static_cast<Index>(header.size()) != m.cols()) throw ShapeError("csv header does not match matrix width");
  CsvTable t{header, {}};
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r;
    for (Index j = 0; j < m.cols(); ++j) r.push_back(format_number(m(i, j)));
    t.rows.push_back(std::move(r));
  }
  return t;
}

/// Names prefix1..prefixN.
inline std::vector<std::string> numbered(const std::string& prefix, Index count) {
  std::vector<std::string> out;
  for (Index i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace axiocat
