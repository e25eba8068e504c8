#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lisakit/matrices.hpp"
#include "lisakit/variables.hpp"

namespace lisakit::csv {

// Distance CSV:  id,<label1>,...,<labeln>  then  <label_i>,<d_i1>,...,<d_in>
// Values CSV:    id,<column1>[,<column2>...]  then  <label_i>,<x_i>[,...]
//
// Comma separated, '.' decimal point, UTF-8 (a leading BOM is skipped),
// LF or CRLF line ends. Fields may be double-quoted. Blank lines are ignored.
// Structural problems throw ParseError naming the source and line; data that
// parses but violates matrix invariants throws Error from the constructors.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  ///< source line of each row
};

/// `source` is used in error messages only.
Table read_table(std::istream& in, std::string_view source);

DistanceMatrix parse_distances(std::istream& in, std::string_view source);
DistanceMatrix read_distances(const std::string& path);

struct ValuesTable {
  std::vector<std::string> labels;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  ///< data[column][unit]

  /// Empty name selects the first column. Throws InvalidArgument if absent.
  AttributeVector column(std::string_view name = {}) const;
};

ValuesTable parse_values(std::istream& in, std::string_view source);
ValuesTable read_values(const std::string& path);

/// Shortest text that parses back to exactly `value`.
std::string format_double(double value);

/// Quotes a field when it contains a comma, quote or line break.
std::string escape_field(std::string_view field);

}  // namespace lisakit::csv
