#include "lisakit/csv.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

#include "lisakit/error.hpp"

namespace lisakit::csv {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(std::string_view line,
                                    std::string_view source, std::size_t lineno) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    // Skip leading blanks so that  , "a b"  is still treated as quoted.
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::string field;
    if (pos < line.size() && line[pos] == '"') {
      ++pos;
      bool closed = false;
      while (pos < line.size()) {
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            field += '"';
            pos += 2;
            continue;
          }
          closed = true;
          ++pos;
          break;
        }
        field += line[pos++];
      }
      if (!closed) {
        throw ParseError(std::string(source), lineno, "unterminated quoted field");
      }
      const auto comma = line.find(',', pos);
      const auto rest = trim(line.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos));
      if (!rest.empty()) {
        throw ParseError(std::string(source), lineno,
                         "unexpected text after quoted field");
      }
      pos = comma;
    } else {
      const auto comma = line.find(',', pos);
      field = std::string(trim(line.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos)));
      pos = comma;
    }
    fields.push_back(std::move(field));
    if (pos == std::string_view::npos) break;
    ++pos;  // past the comma
  }
  return fields;
}

double parse_number(const std::string& text, std::string_view source,
                    std::size_t lineno, std::string_view what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(std::string(source), lineno,
                     "cannot parse '" + text + "' as a number (" +
                         std::string(what) + ")");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

Table read_table(std::istream& in, std::string_view source) {
  Table table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_line(line, source, lineno);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError(std::string(source), lineno,
                       "expected " + std::to_string(table.header.size()) +
                           " fields, found " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(lineno);
  }
  if (!have_header) throw ParseError(std::string(source), 1, "file is empty");
  if (table.header.size() < 2 || table.header.front() != "id") {
    throw ParseError(std::string(source), 1,
                     "header must start with 'id' followed by at least one column");
  }
  return table;
}

DistanceMatrix parse_distances(std::istream& in, std::string_view source) {
  auto table = read_table(in, source);
  std::vector<std::string> labels(table.header.begin() + 1, table.header.end());
  const std::size_t n = labels.size();
  if (table.rows.size() != n) {
    const std::size_t line =
        table.rows.empty() ? 1 : table.line_numbers.back();
    throw ParseError(std::string(source), line,
                     "header names " + std::to_string(n) + " units but there are " +
                         std::to_string(table.rows.size()) + " data rows");
  }
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = table.rows[i];
    const auto lineno = table.line_numbers[i];
    if (row[0] != labels[i]) {
      throw ParseError(std::string(source), lineno,
                       "row label '" + row[0] + "' does not match column '" +
                           labels[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = parse_number(row[j + 1], source, lineno,
                             "distance " + row[0] + " to " + labels[j]);
    }
  }
  return DistanceMatrix(std::move(labels), std::move(d));
}

DistanceMatrix read_distances(const std::string& path) {
  auto in = open(path);
  return parse_distances(in, path);
}

AttributeVector ValuesTable::column(std::string_view name) const {
  if (columns.empty()) {
    throw Error(ErrorCode::InvalidArgument, "values table has no columns");
  }
  if (name.empty()) return AttributeVector(labels, data.front());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return AttributeVector(labels, data[c]);
  }
  std::string available;
  for (const auto& c : columns) available += (available.empty() ? "" : ", ") + c;
  throw Error(ErrorCode::InvalidArgument, "no column '" + std::string(name) +
                                              "' (available: " + available + ")");
}

ValuesTable parse_values(std::istream& in, std::string_view source) {
  auto table = read_table(in, source);
  ValuesTable out;
  out.columns.assign(table.header.begin() + 1, table.header.end());
  out.data.assign(out.columns.size(), {});
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    out.labels.push_back(row[0]);
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      out.data[c].push_back(parse_number(row[c + 1], source,
                                         table.line_numbers[r],
                                         "column " + out.columns[c]));
    }
  }
  return out;
}

ValuesTable read_values(const std::string& path) {
  auto in = open(path);
  return parse_values(in, path);
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string escape_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace lisakit::csv
