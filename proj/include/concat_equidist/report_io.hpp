#pragma once

// Tabular output shared by every CLI command.
//
// CSV: one header row, comma-separated rows, LF endings, then optional
// "# key=value" footer lines. JSON: one object {"rows": [...], footer keys...}
// with row keys in header order. Floats are rounded to 12 significant digits
// in both encodings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "concat_equidist/asymptotics.hpp"
#include "concat_equidist/counting.hpp"
#include "concat_equidist/equidist.hpp"

namespace concat_equidist {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> footer;
};

// "%.12g"
std::string format_float(double v);
// The double that format_float(v) denotes.
double round_to_12(double v);
std::string format_cell(const Cell& c);

void write_csv(std::ostream& out, const Table& table);
nlohmann::ordered_json to_json(const Table& table);

// Inverse of write_csv: every cell comes back as its string form.
struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> footer;

  std::size_t column(const std::string& name) const;
  const std::string& footer_value(const std::string& key) const;
};
CsvDocument read_csv(std::istream& in);

Table count_table(const CountResult& result, const std::string& spec_label);
Table scan_table(const RatioScanReport& report);
Table benford_table(const BenfordReport& report);
Table limits_table(int d_max);

// Parses newline-delimited positive decimal integers; blank lines skipped.
// Throws DomainError naming the offending line.
std::vector<BigInt> read_integer_lines(std::istream& in);

}  // namespace concat_equidist
