#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "concat_equidist/asymptotics.hpp"
#include "concat_equidist/cli.hpp"
#include "concat_equidist/report_io.hpp"

using namespace concat_equidist;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

CsvDocument csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

std::string fixture(const std::string& name) { return std::string(CE_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("tail prints the leading digits") {
  CHECK(run({"tail", "--kind", "champ", "--n", "20", "--digits", "12"}).out == "0.202122232425\n");
  CHECK(run({"tail", "--kind", "mult", "--k", "1", "--n", "1", "--digits", "19"}).out ==
        "0.1234567891011121314\n");
  CHECK(run({"tail", "--kind", "poly", "--coeffs", "0,0,1", "--n", "1", "--digits", "9"}).out ==
        "0.149162536\n");
  CHECK(run({"tail", "--kind", "champ", "--base", "16", "--n", "15", "--digits", "4"}).out ==
        "0.f101\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"tail", "--kind", "bogus", "--n", "1", "--digits", "3"}).code == cli::kUsageError);
  CHECK(run({"tail", "--kind", "champ", "--digits", "3"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"tail", "--kind", "poly", "--n", "1", "--digits", "3"}).code == cli::kUsageError);
  const auto below = run({"tail", "--kind", "poly", "--coeffs", "-5,1", "--n", "3", "--digits", "3"});
  CHECK(below.code == cli::kDomainError);
  CHECK(below.err.find("n_min") != std::string::npos);
  CHECK(run({"tail", "--kind", "poly", "--coeffs", "7", "--n", "3", "--digits", "3"}).code ==
        cli::kDomainError);
  CHECK(run({"count", "--kind", "champ", "--lo", "0.3", "--hi", "0.2", "--N", "5"}).code ==
        cli::kDomainError);
  CHECK(run({"count", "--kind", "champ", "--lo", "1/3", "--hi", "0.5", "--N", "5"}).code ==
        cli::kDomainError);
  const auto undecided =
      run({"count", "--kind", "champ", "--lo", "0.15", "--hi", "0.2", "--N", "5", "--max-digits", "1"});
  CHECK(undecided.code == cli::kUndecided);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("count records") {
  auto r = run({"count", "--kind", "champ", "--lo", "0.1", "--hi", "0.2", "--N", "20"});
  REQUIRE(r.code == 0);
  auto doc = csv(r.out);
  REQUIRE(doc.rows.size() == 1);
  CHECK(doc.rows[0][doc.column("count")] == "11");
  CHECK(doc.rows[0][doc.column("ratio")] == "0.55");

  r = run({"count", "--kind", "champ", "--lo", "0", "--hi", "1", "--N", "100", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["count"] == 100);
  CHECK(j["rows"][0]["ratio"] == 1.0);

  doc = csv(run({"count", "--kind", "champ", "--lo", "0", "--hi", "0.1", "--N", "1000"}).out);
  CHECK(doc.rows[0][doc.column("count")] == "0");

  // The digit-stream path reports the same count.
  doc = csv(run({"count", "--kind", "mult", "--k", "7", "--lo", "0.1", "--hi", "0.2", "--N", "2857",
                 "--no-fast-path"})
                .out);
  CHECK(doc.rows[0][doc.column("count")] == "1587");
}

TEST_CASE("scan tables") {
  auto doc = csv(run({"scan", "--kind", "mult", "--k", "1", "--jmax", "4"}).out);
  CHECK(std::abs(std::stod(doc.rows.back()[doc.column("ratio")]) - 0.5556) <= 1e-3);
  CHECK(std::stod(doc.footer_value("target_constant")) == doctest::Approx(5.0 / 9.0));
  CHECK(std::stod(doc.footer_value("baseline_density")) == doctest::Approx(1.0 / 9.0));

  doc = csv(run({"scan", "--kind", "mult", "--k", "3", "--jmax", "6"}).out);
  for (const auto& row : doc.rows) {
    if (std::stoi(row[doc.column("j")]) >= 2) CHECK(std::stod(row[doc.column("ratio")]) > 0.5);
  }

  doc = csv(run({"scan", "--kind", "poly", "--coeffs", "0,0,1", "--Jmax", "8"}).out);
  CHECK(std::abs(std::stod(doc.rows.back()[doc.column("ratio")]) - 0.4284) <= 0.05);
  CHECK(std::stod(doc.footer_value("paper_lower_bound")) == doctest::Approx(y_value(2)));
  CHECK(doc.footer_value("kind") == "poly-d");

  const auto capped = run({"scan", "--kind", "mult", "--k", "1", "--jmax", "7"});
  CHECK(capped.code == cli::kUsageError);
  CHECK(capped.err.find("--unsafe-uncapped") != std::string::npos);

  const auto empty = run({"scan", "--kind", "mult", "--k", "200", "--jmax", "2"});
  CHECK(empty.code == cli::kUsageError);
  CHECK(empty.err.find("at least 3") != std::string::npos);
}

TEST_CASE("benford reports") {
  auto doc = csv(run({"benford", "--gen", "naturals", "--N", "20000"}).out);
  CHECK(std::stod(doc.rows[0][doc.column("freq")]) >= 0.5);

  doc = csv(run({"benford", "--gen", "pow2", "--N", "10000"}).out);
  CHECK(std::stod(doc.footer_value("max_abs_gap")) <= 0.02);

  const auto ones = run({"benford", "--file", fixture("ones.txt"), "--format", "json"});
  REQUIRE(ones.code == 0);
  const auto j = nlohmann::json::parse(ones.out);
  CHECK(j["rows"][0]["freq"] == 1.0);
  for (int c = 1; c < 9; ++c) CHECK(j["rows"][c]["freq"] == 0.0);
  CHECK(j["N"] == 100);

  const auto bad = run({"benford", "--file", fixture("bad_line.txt")});
  CHECK(bad.code == cli::kDomainError);
  CHECK(bad.err.find("line 4") != std::string::npos);
  CHECK(run({"benford", "--file", fixture("does_not_exist.txt")}).code == cli::kDomainError);

  const fs::path empty = fs::temp_directory_path() / "concat_equidist_empty.txt";
  std::ofstream(empty) << "\n\n";
  CHECK(run({"benford", "--file", empty.string()}).code == cli::kDomainError);
  fs::remove(empty);

  CHECK(run({"benford"}).code == cli::kUsageError);
}

TEST_CASE("limits table") {
  const auto doc = csv(run({"limits", "--dmax", "12"}).out);
  REQUIRE(doc.rows.size() == 12);
  CHECK(doc.rows[0][doc.column("y_d")].rfind("0.27777777", 0) == 0);
  CHECK(doc.rows[0][doc.column("scan_limit")].rfind("0.55555555", 0) == 0);
  CHECK(doc.footer_value("baseline_density").rfind("0.1111111", 0) == 0);
  CHECK(doc.footer_value("y_limit").rfind("0.15051499", 0) == 0);
  for (std::size_t i = 1; i < doc.rows.size(); ++i) {
    CHECK(std::stod(doc.rows[i][doc.column("y_d")]) < std::stod(doc.rows[i - 1][doc.column("y_d")]));
  }
}

TEST_CASE("discrepancy command") {
  auto doc = csv(run({"discrepancy", "--kind", "champ", "--N", "20000"}).out);
  CHECK(std::stod(doc.rows[0][doc.column("ud_deviation")]) >= 0.4);

  doc = csv(run({"discrepancy", "--gen", "naturals", "--N", "2000"}).out);
  CHECK(std::stod(doc.rows[0][doc.column("star_discrepancy")]) >= 0.2);

  doc = csv(run({"discrepancy", "--gen", "pow2", "--N", "10000"}).out);
  CHECK(std::stod(doc.rows[0][doc.column("star_discrepancy")]) <= 0.01);
  CHECK(std::stod(doc.rows[0][doc.column("weyl_h1")]) <= 0.01);

  doc = csv(run({"discrepancy", "--gen", "poly", "--coeffs", "0,0,1", "--N", "5000"}).out);
  CHECK(std::stod(doc.rows[0][doc.column("star_discrepancy")]) >= 0.1);
}

TEST_CASE("output is identical for every thread count") {
  const std::vector<std::string> scan = {"scan", "--kind", "mult", "--k", "1", "--jmax", "6"};
  auto with = [&](const std::string& threads) {
    auto args = scan;
    args.insert(args.end(), {"--threads", threads});
    return run(args).out;
  };
  const std::string one = with("1");
  CHECK(with("3") == one);
  CHECK(with("4") == one);

  ::setenv("CONCAT_EQUIDIST_THREADS", "2", 1);
  CHECK(run(scan).out == one);
  ::unsetenv("CONCAT_EQUIDIST_THREADS");
}

TEST_CASE("scan CSV round trips to the in-memory report") {
  const HalfOpenInterval I(ExactEndpoint::parse("0.1"), ExactEndpoint::parse("0.2"));
  const IntPoly f = IntPoly::parse("1,0,0,2");
  const auto report = ratio_scan(TailSpec::polynomial(f), I, subsequence_points_poly(f, 8));
  std::ostringstream out;
  write_csv(out, scan_table(report));
  CHECK(run({"scan", "--kind", "poly", "--coeffs", "1,0,0,2"}).out == out.str());

  const auto doc = csv(out.str());
  REQUIRE(doc.rows.size() == report.records.size());
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& row = doc.rows[i];
    const auto& r = report.records[i];
    CHECK(std::stoi(row[doc.column("j")]) == r.j);
    CHECK(std::stoull(row[doc.column("N")]) == r.N);
    CHECK(std::stoull(row[doc.column("count")]) == r.count);
    CHECK(std::stod(row[doc.column("ratio")]) == round_to_12(r.ratio));
    CHECK(std::stod(row[doc.column("main_term")]) == round_to_12(r.main_term));
    CHECK(std::stod(row[doc.column("residual")]) == round_to_12(r.residual));
  }
  CHECK(std::stod(doc.footer_value("target_constant")) == round_to_12(report.target_constant));
  CHECK(doc.footer_value("spec") == report.spec_label);
}

TEST_CASE("JSON keys keep header order") {
  const auto r = run({"scan", "--kind", "mult", "--k", "2", "--jmax", "3", "--format", "json"});
  const std::string& s = r.out;
  const auto pos = [&](const char* key) { return s.find(std::string("\"") + key + "\""); };
  CHECK(pos("j") < pos("N"));
  CHECK(pos("N") < pos("count"));
  CHECK(pos("count") < pos("ratio"));
  CHECK(pos("ratio") < pos("main_term"));
  CHECK(pos("main_term") < pos("residual"));
  CHECK(pos("rows") < pos("target_constant"));
}

TEST_CASE("--output writes the file") {
  const fs::path path = fs::temp_directory_path() / "concat_equidist_limits.csv";
  REQUIRE(run({"limits", "--dmax", "2", "--output", path.string()}).code == 0);
  std::ifstream in(path);
  const auto doc = read_csv(in);
  CHECK(doc.rows.size() == 2);
  fs::remove(path);
}

TEST_CASE("integer line reader") {
  std::istringstream in("5\n\n  12  \r\n7\n");
  const auto v = read_integer_lines(in);
  REQUIRE(v.size() == 3);
  CHECK(v[1] == 12);
  std::istringstream zero("3\n0\n");
  CHECK_THROWS_WITH(read_integer_lines(zero), doctest::Contains("line 2"));
}
