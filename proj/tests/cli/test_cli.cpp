#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "gyro/einstein.hpp"
#include "gyro/isomorphism.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gyroball");
  std::ostringstream out, err;
  const int code = gyroball::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scene(const std::string& name) { return std::string(GYROBALL_SCENE_DIR) + "/" + name; }
std::string fixture(const std::string& name) { return std::string(GYROBALL_FIXTURE_DIR) + "/" + name; }

void check_vec(const json& got, std::vector<double> want, double tol = 1e-15) {
  REQUIRE(got.is_array());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i].get<double>() - want[i]) < tol);
}

/// Sets an environment variable for the lifetime of the guard.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~EnvGuard() { ::unsetenv(name_); }

 private:
  const char* name_;
};

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("eval examples") {
  Run r = run({"eval", "--model", "einstein", "--op", "add", "--c", "1", "0.5,0", "0.5,0"});
  CHECK(r.code == 0);
  check_vec(json::parse(r.out), {0.8, 0.0});

  r = run({"eval", "--op", "midpoint", "0,0", "0.8,0"});
  CHECK(r.code == 0);
  check_vec(json::parse(r.out), {0.5, 0.0});

  r = run({"eval", "--op", "add", "1.5,0", "0,0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("BoundaryOrOutside") != std::string::npos);
}

TEST_CASE("eval operations") {
  check_vec(json::parse(run({"eval", "--model", "mobius", "--op", "add", "-0.5,0", "0.5,0"}).out), {0.0, 0.0});
  check_vec(json::parse(run({"eval", "--op", "scalar", "--r", "2", "0.5,0"}).out), {0.8, 0.0});
  check_vec(json::parse(run({"eval", "--op", "coadd", "0.5,0", "0.5,0"}).out), {0.8, 0.0});
  const gyro::BallParams unit(2, 1.0);
  const gyro::BallPoint p(unit, {0.1, 0.2}), q(unit, {-0.3, 0.0}), w(unit, {0.0, 0.4});
  const gyro::Vector three = gyro::einstein::coadd3(p, q, w).coords();
  check_vec(json::parse(run({"eval", "--op", "coadd", "0.1,0.2", "-0.3,0", "0,0.4"}).out), {three[0], three[1]});
  CHECK(json::parse(run({"eval", "--op", "distance", "0,0", "0.5,0"}).out).get<double>() == 0.5);

  const json matrix = json::parse(run({"eval", "--op", "gyr", "0.3,0", "0.5,0"}).out);
  check_vec(matrix[0], {1.0, 0.0});
  check_vec(matrix[1], {0.0, 1.0});
  const json applied = json::parse(run({"eval", "--model", "mobius", "--op", "gyr", "0.3,0.1", "-0.2,0.4", "0.1,0"}).out);
  CHECK(applied.size() == 2);

  const Run big = run({"eval", "--op", "add", "--c", "2", "1.5,0", "0,1.5"});
  CHECK(big.code == 0);
}

TEST_CASE("eval usage errors exit 2") {
  CHECK(run({"eval", "--op", "add", "0.5,x", "0,0"}).code == 2);
  CHECK(run({"eval", "--op", "add", "0.5,0", "0,0,0"}).code == 2);
  CHECK(run({"eval", "--op", "add", "0.5,0"}).code == 2);
  CHECK(run({"eval", "--op", "divide", "0.5,0", "0,0"}).code == 2);
  CHECK(run({"eval", "--model", "klein", "--op", "add", "0.5,0", "0,0"}).code == 2);
  CHECK(run({"eval", "--op", "add", "--c", "-1", "0.5,0", "0,0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("endpoints") {
  Run r = run({"endpoints", "0,0", "0.5,0"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  check_vec(j["e1"], {-1.0, 0.0});
  check_vec(j["e2"], {1.0, 0.0});
  check_vec(j["norms"], {1.0, 1.0});

  CHECK(run({"endpoints", "--model", "mobius", "0.2,0.1", "0.2,0.1"}).code == 3);

  r = run({"endpoints", "--model", "mobius", "0.31,-0.2", "-0.05,0.6"});
  CHECK(r.code == 0);
  for (double n : json::parse(r.out)["norms"]) CHECK(std::abs(n - 1.0) < 1e-9);
}

TEST_CASE("convert") {
  const json j = json::parse(run({"convert", "--to", "einstein", "0.5,0", "0,0"}).out);
  check_vec(j[0], {0.8, 0.0});
  check_vec(j[1], {0.0, 0.0});
  check_vec(json::parse(run({"convert", "--to", "mobius", "0.8,0"}).out)[0], {0.5, 0.0});
}

TEST_CASE("check exit codes") {
  Run r = run({"check", "--model", "mobius", "--suite", "gyrogroup", "--samples", "1000", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("left-gyroassociativity") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"check", "--model", "einstein", "--suite", "all", "--samples", "200"});
  CHECK(r.code == 0);
  for (const char* name : {"two-sum", "midpoint-forms", "covariance-rotation", "transport-coadd-k", "line-element"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }

  r = run({"check", "--suite", "broken-model"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);

  CHECK(run({"check", "--suite", "no-such-suite"}).code == 2);
  CHECK(run({"check", "--cap", "1.5"}).code == 2);
}

TEST_CASE("check rows are deterministic and honour the seed precedence") {
  const std::vector<std::string> args{"check", "--model", "mobius", "--suite", "cooperation", "--samples", "300"};
  const std::string plain = run(args).out;
  CHECK(plain == run(args).out);
  CHECK(plain.find("seed 1 ") != std::string::npos);

  {
    EnvGuard env("GYROBALL_SEED", "99");
    const std::string from_env = run(args).out;
    CHECK(from_env.find("seed 99 ") != std::string::npos);
    CHECK(from_env != plain);

    std::vector<std::string> with_flag = args;
    with_flag.insert(with_flag.end(), {"--seed", "5"});
    CHECK(run(with_flag).out.find("seed 5 ") != std::string::npos);
  }
  {
    EnvGuard env("GYROBALL_SEED", "abc");
    CHECK(run(args).code == 2);
  }
}

TEST_CASE("figure csv for an einstein gyroline") {
  const Run r = run({"figure", scene("einstein_gyroline.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"construction_id", "t", "x1", "x2", "residual"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][2]), y = std::stod(rows[i][3]);
    CHECK(std::hypot(x, y) <= 1.0);
  }
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[101][1]) == 1.0);
}

TEST_CASE("figure residuals for the mobius double gyroline scene") {
  const Run r = run({"figure", scene("mobius_double_gyroline.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    INFO(rows[i][0], " t=", rows[i][1]);
    CHECK(std::stod(rows[i].back()) < 1e-9);
  }
  const Run svg = run({"figure", scene("mobius_double_gyroline.json"), "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(svg.out.find("</svg>") != std::string::npos);
}

TEST_CASE("figure output is byte deterministic") {
  for (const char* fmt : {"csv", "json", "svg"}) {
    const Run a = run({"figure", scene("gyroparallelogram.json"), "--format", fmt});
    const Run b = run({"figure", scene("gyroparallelogram.json"), "--format", fmt});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const Run other = run({"figure", scene("gyroparallelogram.json"), "--seed", "8"});
  CHECK(other.out != run({"figure", scene("gyroparallelogram.json")}).out);
}

TEST_CASE("figure --to einstein doubles every point") {
  const json m = json::parse(run({"figure", scene("mobius_double_gyroline.json"), "--format", "json"}).out);
  const json e = json::parse(run({"figure", scene("mobius_double_gyroline.json"), "--format", "json", "--to", "einstein"}).out);
  CHECK(e["model"] == "einstein");
  const gyro::BallParams unit(2, 1.0);
  REQUIRE(m["rows"].size() == e["rows"].size());
  for (std::size_t i = 0; i < m["rows"].size(); ++i) {
    const json& rm = m["rows"][i];
    const json& re = e["rows"][i];
    const std::vector<double> xm = rm["x"], xe = re["x"];
    if (rm["boundary"].get<bool>()) {
      CHECK(xm == xe);
      continue;
    }
    const gyro::Vector want = gyro::m_to_e(gyro::BallPoint(unit, {xm[0], xm[1]})).coords();
    CHECK(std::abs(xe[0] - want[0]) < 1e-15);
    CHECK(std::abs(xe[1] - want[1]) < 1e-15);
  }
}

TEST_CASE("figure error exits") {
  CHECK(run({"figure", scene("endpoints3d.json"), "--format", "svg"}).code == 4);
  CHECK(run({"figure", scene("endpoints3d.json"), "--format", "csv"}).code == 0);
  CHECK(run({"figure", fixture("malformed.json")}).code == 2);
  CHECK(run({"figure", fixture("outside.json")}).code == 2);
  CHECK(run({"figure", fixture("truncated.json")}).code == 2);
  CHECK(run({"figure", fixture("missing.json")}).code == 2);
}

TEST_CASE("figure --out writes the file") {
  const std::filesystem::path out = std::filesystem::temp_directory_path() / "gyroball_test_figure.csv";
  const Run r = run({"figure", scene("einstein_gyroline.json"), "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"figure", scene("einstein_gyroline.json")}).out);
  std::filesystem::remove(out);
}
