#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"

using qhe::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qhe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::string header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv c;
  std::istringstream is(text);
  std::getline(is, c.header);
  for (std::string line; std::getline(is, line);) {
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    c.rows.push_back(row);
  }
  return c;
}

}  // namespace

TEST_CASE("fig1 default run") {
  const auto r = run({"fig1"});
  REQUIRE(r.code == 0);
  const Csv c = parse_csv(r.out);
  CHECK(c.header.rfind("# command=fig1 version=", 0) == 0);
  CHECK(c.header.find("omega_over_T1=0.5") != std::string::npos);
  CHECK(c.header.find("columns=T2_over_T1,p_e_eto,p_e_thermalization") != std::string::npos);
  bool below = false, above = false, unit_row = false;
  for (const auto& row : c.rows) {
    REQUIRE(row.size() == 3);
    below |= row[1] < 0.5;
    above |= row[1] > 0.5;
    CHECK(row[2] < 0.5);
    if (row[0] == 1.0) {
      unit_row = true;
      CHECK(std::fabs(row[1] - row[2]) < 1e-12);
    }
  }
  CHECK(below);
  CHECK(above);
  CHECK(unit_row);
  CHECK(std::fabs(c.rows.back()[1] - 1.0 / (1.0 + std::exp(-0.5))) < 1e-3);
}

TEST_CASE("fig4 ordering and determinism") {
  const auto a = run({"fig4"});
  const auto b = run({"fig4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Csv c = parse_csv(a.out);
  CHECK(c.header.find("eta_C=0.5") != std::string::npos);
  REQUIRE(c.rows.size() == 49);
  for (const auto& row : c.rows) {
    CHECK(row[1] > row[2]);
    CHECK(row[2] > row[3]);
  }
  CHECK(c.rows.back()[1] < 0.01);
}

TEST_CASE("fig5 and fig6 content") {
  const auto f5 = run({"fig5", "--set", "horizon=infinite"});
  REQUIRE(f5.code == 0);
  const Csv c5 = parse_csv(f5.out);
  CHECK(c5.header.find("eta=0.3 eta_C=0.5") != std::string::npos);
  double min_otto = 1e300, three = 0.0;
  int three_rows = 0;
  for (const auto& row : c5.rows) {
    CHECK(row[0] == 1.0);
    if (row[1] == 2.0) {
      three = row[4];
      ++three_rows;
    } else {
      min_otto = std::min(min_otto, row[4]);
    }
  }
  CHECK(three_rows == 1);
  CHECK(three < min_otto);

  const auto f6 = run({"fig6"});
  REQUIRE(f6.code == 0);
  const Csv c6 = parse_csv(f6.out);
  REQUIRE(c6.rows.size() == 121);
  for (std::size_t i = 0; i + 1 < c6.rows.size(); ++i) {
    CHECK(c6.rows[i][0] == 0.0);
    CHECK(c6.rows[i][3] >= -1e-9);
    CHECK(c6.rows[i][3] <= 1.0 + 1e-9);
  }
  CHECK(c6.rows.front()[3] > 0.99);
  CHECK(c6.rows.back()[0] == 2.0);
  CHECK(c6.rows.back()[3] < 0.0);
}

TEST_CASE("json output") {
  const auto r = run({"fig1", "--format", "json", "--set", "points_per_decade=3"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["command"] == "fig1");
  CHECK(doc["metadata"]["parameters"]["points_per_decade"] == "3");
  CHECK(doc["metadata"]["columns"].size() == 3);
  // 1e-2 .. 1e3 at three points per decade, endpoints included.
  CHECK(doc["rows"].size() == 16);
  const double v = doc["rows"][5][1].get<double>();
  CHECK(run({"fig1", "--set", "points_per_decade=3"}).out.find(qhe::cli::format_number(v)) !=
        std::string::npos);
}

TEST_CASE("sweep and micro-report") {
  const auto s = run({"sweep", "--set", "points=5"});
  REQUIRE(s.code == 0);
  const Csv c = parse_csv(s.out);
  REQUIRE(c.rows.size() == 5);
  for (const auto& row : c.rows) {
    CHECK(std::fabs(row[1] - row[2] - row[3]) < 1e-11);
    CHECK(row[4] == doctest::Approx(0.3));
  }
  const auto t = run({"sweep", "--set", "engine=three_stroke", "--set", "points=4"});
  CHECK(t.code == 0);
  CHECK(run({"sweep", "--set", "engine=diesel"}).code == 1);

  const auto m = run({"micro-report", "--set", "t_points=3"});
  REQUIRE(m.code == 0);
  const Csv mc = parse_csv(m.out);
  REQUIRE(mc.rows.size() == 6);
  CHECK(mc.rows[1][2] < 1e-8);
  CHECK(mc.rows[4][2] > 1e-3);
}

TEST_CASE("verify") {
  const auto ok = run({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS oracle-equivalence/otto-variance") != std::string::npos);

  const auto bad = run({"verify", "--suite", "gibbs-fixed-point", "--set", "perturb=1e-6"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("FAIL gibbs-fixed-point/fixed-point") != std::string::npos);

  const auto js = run({"verify", "--suite", "first-law", "--format", "json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"].size() == 2);

  CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
}

TEST_CASE("validation and I/O errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"fig7"}).code == 1);
  CHECK(run({"fig1", "--format", "xml"}).code == 1);
  const auto unknown = run({"fig1", "--set", "omega=1"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("omega") != std::string::npos);
  CHECK(run({"fig1", "--set", "t2_min"}).code == 1);
  CHECK(run({"fig1", "--set", "t2_min=abc"}).code == 1);
  CHECK(run({"fig1", "--set", "t2_min=1", "--set", "t2_min=2"}).code == 1);
  CHECK(run({"fig4", "--set", "eta_C=1.5"}).code == 1);
  CHECK(run({"fig5", "--set", "horizon=sometimes"}).code == 1);

  const auto io = run({"fig1", "--out", "/nonexistent-dir/out.csv"});
  CHECK(io.code == 3);
  CHECK(io.err.find("/nonexistent-dir/out.csv") != std::string::npos);
}

TEST_CASE("writes to --out") {
  const auto path = std::filesystem::temp_directory_path() / "qhe_cli_test_fig1.csv";
  std::filesystem::remove(path);
  const auto r = run({"fig1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"fig1"}).out);
  std::filesystem::remove(path);
}
