// Copyright 2026 The hopfdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <set>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"
#include "hopfdual/hopfdual.hpp"

using namespace hopfdual;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const double kR = std::numbers::sqrt2 / 2;

TwoQubitState bell() { return make_state({kR, 0.0, 0.0, kR}); }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfdual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& row, char sep = ',') {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(row);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!row.empty() && row.back() == sep) out.emplace_back();
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("hopfdual_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Stream buffer that rejects every write.
class FailingBuf : public std::streambuf {
 protected:
  int_type overflow(int_type) override { return traits_type::eof(); }
};

}  // namespace

TEST_CASE("verify_suite passes on a healthy implementation", "[harness]") {
  const auto report = verify_suite(20000, 7);
  for (const auto& c : report.checks) {
    INFO(c.name << " max_error=" << c.max_error);
    CHECK(c.passed);
    CHECK(c.samples > 0);
  }
  CHECK(report.passed());
  CHECK(report.checks.size() == 10);
  CHECK(report.find("dual_route")->tolerance == 1e-9);
  CHECK(report.find("concurrence_oracle")->tolerance == 1e-12);
  CHECK(report.find("nope") == nullptr);
  CHECK_THROWS_AS(verify_suite(0, 1), std::invalid_argument);
}

TEST_CASE("identity error is exactly zero on a planted Bell state", "[harness]") {
  const std::vector<TwoQubitState> one{bell()};
  const auto report = verify_states(one, {});
  CHECK(report.find("identity")->max_error == 0.0);
  CHECK(report.find("identity")->samples == 1);
}

TEST_CASE("corrupted concurrence is caught", "[harness]") {
  Measures broken;
  broken.concurrence = [](const TwoQubitState& s) { return concurrence(s) + 1e-3; };
  const auto report = verify_suite(2000, 3, kDefaultVerifyTol, broken);
  CHECK_FALSE(report.passed());
  const auto* c = report.find("concurrence_oracle");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK_THAT(c->max_error, WithinAbs(1e-3, 1e-12));
  CHECK_FALSE(report.find("identity")->passed);
  // Checks that do not consume the measure are unaffected.
  CHECK(report.find("sphere_closure")->passed);
}

TEST_CASE("NaN measures fail rather than pass", "[harness]") {
  Measures broken;
  broken.visibility = [](const TwoQubitState&) { return std::nan(""); };
  const auto report = verify_suite(10, 3, kDefaultVerifyTol, broken);
  CHECK_FALSE(report.find("identity")->passed);
  CHECK(std::isinf(report.find("identity")->max_error));
}

TEST_CASE("emit_dataset", "[harness]") {
  SECTION("empty input") {
    std::ostringstream csv, json;
    emit_dataset({}, DatasetFormat::Csv, csv);
    CHECK(csv.str() ==
          "alpha0_re,alpha0_im,alpha1_re,alpha1_im,alpha2_re,alpha2_im,alpha3_re,alpha3_im,"
          "V,D,C,x0,x1,x2,x3,x4,radius,labels\n");
    emit_dataset({}, DatasetFormat::Json, json);
    CHECK(json.str() == "[]\n");
  }
  SECTION("Bell row") {
    const std::vector<TwoQubitState> one{bell()};
    std::ostringstream out;
    emit_dataset(one, DatasetFormat::Csv, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 2);
    const auto cells = split(rows[1]);
    REQUIRE(cells.size() == 18);
    CHECK(std::stod(cells[8]) == 0.0);
    CHECK(std::stod(cells[9]) == 0.0);
    CHECK_THAT(std::stod(cells[10]), WithinAbs(1.0, 1e-15));
    CHECK_THAT(std::stod(cells[14]), WithinAbs(-1.0, 1e-15));
    CHECK_THAT(std::stod(cells[16]), WithinAbs(0.0, 1e-7));
    CHECK(cells[17] == "MaximallyEntangled;WaveLess;ParticleLess;OnX0Axis;OnGreatDisc");
  }
  SECTION("17 digits round-trip") {
    const auto states = generate({50, 12, ensemble::Haar{}});
    std::ostringstream out;
    emit_dataset(states, DatasetFormat::Csv, out);
    const auto rows = lines(out.str());
    for (std::size_t k = 0; k < states.size(); ++k) {
      const auto cells = split(rows[k + 1]);
      for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::stod(cells[2 * i]) == states[k][i].real());
        CHECK(std::stod(cells[2 * i + 1]) == states[k][i].imag());
      }
    }
  }
  SECTION("shell batches") {
    const auto states = cli::shell_dataset({0.0, 0.6, 1.0}, 100, 5);
    std::ostringstream out;
    emit_dataset(states, DatasetFormat::Csv, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 301);
    const double want[] = {1.0, 0.8, 0.0};
    for (std::size_t k = 0; k < 300; ++k) {
      const double r = std::stod(split(rows[k + 1])[16]);
      CHECK_THAT(r, WithinAbs(want[k / 100], 1e-10));
    }
  }
  SECTION("JSON records") {
    const std::vector<TwoQubitState> two{bell(), make_state({1.0, 0.0, 0.0, 0.0})};
    std::ostringstream out;
    emit_dataset(two, DatasetFormat::Json, out);
    const auto j = nlohmann::json::parse(out.str());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["C"].get<double>() == Catch::Approx(1.0));
    CHECK(j[1]["x0"].get<double>() == 1.0);
    CHECK(j[1]["labels"] == nlohmann::json{"Separable", "ParticleOnly", "WaveLess", "OnX0Axis"});
    std::vector<std::string> keys;
    const auto ordered = nlohmann::ordered_json::parse(out.str());
    for (auto it = ordered[0].begin(); it != ordered[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>(kDatasetColumns.begin(), kDatasetColumns.end()));
  }
  SECTION("determinism") {
    const SampleSpec spec{300, 42, ensemble::Haar{}};
    std::ostringstream a, b;
    emit_dataset(generate(spec, 1), DatasetFormat::Csv, a);
    emit_dataset(generate(spec, 3), DatasetFormat::Csv, b);
    CHECK(a.str() == b.str());
  }
  SECTION("write failure") {
    FailingBuf buf;
    std::ostream bad(&buf);
    const std::vector<TwoQubitState> one{bell()};
    CHECK_THROWS_AS(emit_dataset(one, DatasetFormat::Csv, bad), std::runtime_error);
  }
}

TEST_CASE("cli analyze", "[cli]") {
  const auto r = run_cli({"analyze", "--state", "0.7071067811865476,0,0,0,0,0,0.7071067811865476,0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["triad"]["C"].get<double>() == Catch::Approx(1.0));
  CHECK(j["s4"][3].get<double>() == Catch::Approx(-1.0));
  CHECK(j["Q"][2].get<double>() == Catch::Approx(-1.0));
  CHECK(j["labels"].size() == 5);

  const auto pole = run_cli({"analyze", "--state", "2,0,0,0,0,0,0,0", "--normalize"});
  REQUIRE(pole.code == 0);
  CHECK(nlohmann::json::parse(pole.out)["Q"] == "inf");

  const auto csv = run_cli({"analyze", "--state=1,0,0,0,0,0,0,0", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 2);
  CHECK_THAT(rows[0], ContainsSubstring(",labels,Q0,Q1,Q2,Q3"));
  CHECK_THAT(rows[1], ContainsSubstring(",inf,inf,inf,inf"));

  CHECK(run_cli({"analyze", "--state", "2,0,0,0,0,0,0,0"}).code == 2);
  CHECK(run_cli({"analyze", "--state", "1,0,0"}).code == 2);
  CHECK(run_cli({"analyze", "--state", "1,x,0,0,0,0,0,0"}).code == 2);
  CHECK(run_cli({"analyze"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("cli embed", "[cli]") {
  TempDir dir;
  {
    std::ofstream(dir / "chi1.txt") << "1,0\n0,0\n0,0\n";
    std::ofstream(dir / "chi2.txt") << "0.6,0\n0,0.8\n\n0,0\n";
    std::ofstream(dir / "bad.txt") << "1,0\nnope\n";
    std::ofstream(dir / "short.txt") << "1,0\n";
  }
  const double s = std::sqrt(0.5);
  const std::string half = std::to_string(s) + ",0";
  const auto r = run_cli({"embed", "--mu", half, "--nu", half, "--chi1", (dir / "chi1.txt").string(),
                      "--chi2", (dir / "chi2.txt").string(), "--normalize"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // Overlap <chi2|chi1> = 0.6, so V = 0.6 and C = 2 * 0.5 * 0.8.
  CHECK(j["triad"]["V"].get<double>() == Catch::Approx(0.6).margin(1e-12));
  CHECK(j["triad"]["C"].get<double>() == Catch::Approx(0.8).margin(1e-12));

  CHECK(run_cli({"embed", "--mu", half, "--nu", half, "--chi1", (dir / "chi1.txt").string(), "--chi2",
             (dir / "bad.txt").string()})
            .code == 2);
  CHECK(run_cli({"embed", "--mu", half, "--nu", half, "--chi1", (dir / "chi1.txt").string(), "--chi2",
             (dir / "short.txt").string()})
            .code == 2);
  CHECK(run_cli({"embed", "--mu", half, "--nu", half, "--chi1", (dir / "missing.txt").string(),
             "--chi2", (dir / "chi1.txt").string()})
            .code == 2);
  // Unnormalized coefficients without --normalize are rejected.
  CHECK(run_cli({"embed", "--mu", "1,0", "--nu", "1,0", "--chi1", (dir / "chi1.txt").string(), "--chi2",
             (dir / "chi1.txt").string()})
            .code == 2);
}

TEST_CASE("cli sample", "[cli]") {
  TempDir dir;
  const auto a = (dir / "a.csv").string(), b = (dir / "b.csv").string(), c = (dir / "c.csv").string();
  REQUIRE(run_cli({"sample", "--seed", "42", "--count", "200", "--out", a}).code == 0);
  REQUIRE(run_cli({"sample", "--seed", "42", "--count", "200", "--out", b}).code == 0);
  REQUIRE(run_cli({"sample", "--seed", "42", "--count", "200", "--out", c, "--threads", "4"}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == slurp(c));
  CHECK(lines(slurp(a)).size() == 201);

  const auto other = run_cli({"sample", "--seed", "43", "--count", "200"});
  REQUIRE(other.code == 0);
  CHECK(other.out != slurp(a));

  const auto fc = run_cli({"sample", "--ensemble", "fixedc", "--c", "0.6", "--count", "20", "--format", "json"});
  REQUIRE(fc.code == 0);
  for (const auto& rec : nlohmann::json::parse(fc.out)) {
    CHECK(rec["radius"].get<double>() == Catch::Approx(0.8).margin(1e-10));
  }

  CHECK(run_cli({"sample", "--ensemble", "fixedc", "--count", "2"}).code == 2);
  CHECK(run_cli({"sample", "--ensemble", "fixedc", "--c", "1.5"}).code == 2);
  CHECK(run_cli({"sample", "--ensemble", "magic"}).code == 2);
  CHECK(run_cli({"sample", "--count", "0"}).code == 2);
  CHECK(run_cli({"sample", "--out", (dir / "no" / "such" / "dir.csv").string()}).code == 2);
}

TEST_CASE("cli verify", "[cli]") {
  const auto r = run_cli({"verify", "--count", "2000", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("overall: PASS"));
  CHECK(lines(r.out).size() == 11);

  const auto j = run_cli({"verify", "--count", "500", "--format", "json"});
  CHECK(j.code == 0);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["passed"] == true);
  CHECK(report["checks"].size() == 10);

  // An absurdly tight tolerance makes the sweep fail with exit code 1.
  const auto tight = run_cli({"verify", "--count", "500", "--tolerance", "1e-30"});
  CHECK(tight.code == 1);
  CHECK_THAT(tight.out, ContainsSubstring("overall: FAIL"));

  CHECK(run_cli({"verify", "--tolerance", "-1"}).code == 2);
}

TEST_CASE("cli shells", "[cli]") {
  const auto r = run_cli({"shells", "--levels", "0,0.6,1", "--count-per-level", "50", "--seed", "9"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 151);
  std::set<long> radii;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    radii.insert(std::lround(std::stod(split(rows[k])[16]) * 1000));
  }
  CHECK(radii == std::set<long>{0, 800, 1000});

  CHECK(run_cli({"shells", "--levels", "0.5,1.2"}).code == 2);
  CHECK(run_cli({"shells"}).code == 2);
}
