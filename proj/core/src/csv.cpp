#include "gls/csv.hpp"

#include <cctype>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>

#include "gls/error.hpp"

namespace gls {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_real(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double parse_real(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty numeric field");
  std::string lower;
  for (char c : t) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity") {
    return INFINITY;
  }
  if (lower == "-inf" || lower == "-infinity") return -INFINITY;
  std::string owned(t);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + owned + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

CsvTable read_numeric_csv(std::istream& in, const std::vector<std::string>& expected_header) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (!have_header) {
      if (fields != expected_header) {
        std::string want;
        for (std::size_t i = 0; i < expected_header.size(); ++i) {
          want += (i ? "," : "") + expected_header[i];
        }
        throw Error(ErrorCode::ParseError, "expected CSV header '" + want + "', got '" + line + "'");
      }
      table.header = fields;
      have_header = true;
      continue;
    }
    if (fields.size() != expected_header.size()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(expected_header.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_real(f));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "CSV input is empty");
  return table;
}

CsvTable read_numeric_csv_file(const std::string& path,
                               const std::vector<std::string>& expected_header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_numeric_csv(in, expected_header);
}

}  // namespace gls
