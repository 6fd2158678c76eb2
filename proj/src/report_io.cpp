#include "concat_equidist/report_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return nlohmann::ordered_json(v); },
                        [](std::uint64_t v) { return nlohmann::ordered_json(v); },
                        [](double v) { return nlohmann::ordered_json(round_to_12(v)); },
                        [](const std::string& v) { return nlohmann::ordered_json(v); },
                    },
                    c);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_to_12(double v) { return std::stod(format_float(v)); }

std::string format_cell(const Cell& c) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return std::to_string(v); },
                        [](std::uint64_t v) { return std::to_string(v); },
                        [](double v) { return format_float(v); },
                        [](const std::string& v) { return v; },
                    },
                    c);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
  for (const auto& [key, value] : table.footer) out << "# " << key << '=' << format_cell(value) << '\n';
}

nlohmann::ordered_json to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  for (const auto& [key, value] : table.footer) doc[key] = cell_json(value);
  return doc;
}

std::size_t CsvDocument::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column " + name);
}

const std::string& CsvDocument::footer_value(const std::string& key) const {
  for (const auto& [k, v] : footer) {
    if (k == key) return v;
  }
  throw std::out_of_range("no CSV footer key " + key);
}

CsvDocument read_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw DomainError("malformed CSV footer: " + line);
      doc.footer.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!have_header) {
      doc.header = split_commas(line);
      have_header = true;
      continue;
    }
    auto cells = split_commas(line);
    if (cells.size() != doc.header.size()) throw DomainError("CSV row width mismatch: " + line);
    doc.rows.push_back(std::move(cells));
  }
  if (!have_header) throw DomainError("CSV without header");
  return doc;
}

Table count_table(const CountResult& result, const std::string& spec_label) {
  Table t;
  t.header = {"spec", "lo", "hi", "first_index", "N", "count", "ratio", "digits_consulted_max"};
  t.rows.push_back({spec_label, result.interval.lo().to_string(), result.interval.hi().to_string(),
                    result.first_index, result.N, result.count, result.ratio,
                    static_cast<std::uint64_t>(result.digits_consulted_max)});
  return t;
}

Table scan_table(const RatioScanReport& report) {
  Table t;
  t.header = {"j", "N", "count", "ratio", "main_term", "residual"};
  for (const auto& r : report.records) {
    t.rows.push_back({static_cast<std::int64_t>(r.j), r.N, r.count, r.ratio, r.main_term, r.residual});
  }
  t.footer = {
      {"spec", report.spec_label},
      {"interval", report.interval},
      {"kind", std::string(report.kind == ScanKind::Linear ? "linear-k" : "poly-d")},
      {"degree", static_cast<std::int64_t>(report.degree)},
      {"target_constant", report.target_constant},
      {"paper_lower_bound", report.constants.paper_lower_bound},
      {"baseline_density", report.constants.baseline_density},
  };
  return t;
}

Table benford_table(const BenfordReport& report) {
  Table t;
  t.header = {"digit", "count", "freq", "benford_freq", "gap"};
  for (int c = 1; c <= 9; ++c) {
    const auto i = static_cast<std::size_t>(c - 1);
    t.rows.push_back({static_cast<std::int64_t>(c), report.digit_count[i], report.digit_freq[i],
                      report.benford_freq[i], report.digit_freq[i] - report.benford_freq[i]});
  }
  t.footer = {
      {"N", report.N},
      {"max_abs_gap", report.max_abs_gap},
      {"log_discrepancy", report.log_discrepancy},
  };
  return t;
}

Table limits_table(int d_max) {
  Table t;
  t.header = {"d", "y_d", "scan_limit"};
  for (int d = 1; d <= d_max; ++d) {
    const auto c = limit_constants(d);
    t.rows.push_back({static_cast<std::int64_t>(d), c.paper_lower_bound, c.scan_limit});
  }
  t.footer = {
      {"baseline_density", 1.0 / 9.0},
      {"y_limit", y_limit()},
  };
  return t;
}

std::vector<BigInt> read_integer_lines(std::istream& in) {
  std::vector<BigInt> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t");
    const std::string field = line.substr(b, e - b + 1);
    auto v = parse_big(field);
    if (!v || sgn(*v) <= 0) {
      throw DomainError("line " + std::to_string(line_no) + ": \"" + field +
                        "\" is not a positive integer");
    }
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace concat_equidist
