#pragma once

// Minimal RFC 4180 subset: comma separated, optional double-quoted fields with
// "" escapes, one record per line (no embedded newlines).

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/errors.hpp"

namespace kindex::csv {

inline std::vector<std::string> split_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  fields.push_back(std::move(field));
  return fields;
}

/// Reads the next non-blank line, stripping a trailing CR. Returns false at EOF.
inline bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::optional<std::int64_t> parse_int(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline std::optional<bool> parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "TRUE" || text == "True" || text == "1") return true;
  if (text == "false" || text == "FALSE" || text == "False" || text == "0") return false;
  return std::nullopt;
}

inline std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << quote(fields[i]);
  }
  out << '\n';
}

/// Matches a header row against expected column names. Returns the number of
/// optional trailing columns present.
inline std::size_t check_header(const std::vector<std::string>& header,
                                const std::vector<std::string_view>& required,
                                const std::vector<std::string_view>& optional_tail,
                                std::size_t line_no) {
  if (header.size() < required.size()) {
    throw ParseError("missing column '" + std::string(required[header.size()]) + "' in header", line_no);
  }
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (trim(header[i]) != required[i]) {
      throw ParseError("expected column '" + std::string(required[i]) + "' but found '" +
                           std::string(trim(header[i])) + "'",
                       line_no);
    }
  }
  std::size_t extra = header.size() - required.size();
  if (extra > optional_tail.size()) throw ParseError("unexpected extra columns in header", line_no);
  for (std::size_t i = 0; i < extra; ++i) {
    if (trim(header[required.size() + i]) != optional_tail[i]) {
      throw ParseError("unexpected column '" + std::string(trim(header[required.size() + i])) + "'",
                       line_no);
    }
  }
  return extra;
}

}  // namespace kindex::csv
