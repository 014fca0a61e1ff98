#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gls {

/// Formats a real with `digits` significant digits. Infinities print as
/// `inf` / `-inf` and NaN as `nan`, so the output parses back via parse_real.
std::string format_real(double x, int digits);

/// Parses a real, accepting `inf`, `+inf`, `-inf`, `infinity`.
/// Throws Error{ParseError} on trailing garbage or empty input.
double parse_real(std::string_view text);

/// Numeric table read from a headed CSV file.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Reads a CSV whose first line must equal `expected_header` (after trimming
/// whitespace around fields). Every data row must have the header's arity.
CsvTable read_numeric_csv(std::istream& in, const std::vector<std::string>& expected_header);
CsvTable read_numeric_csv_file(const std::string& path,
                               const std::vector<std::string>& expected_header);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace gls
