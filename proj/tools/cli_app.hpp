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

#pragma once

// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage or input error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hopfdual/hopfdual.hpp"

namespace hopfdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double parse_real(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InputError("not a finite real number: '" + std::string(text) + "'");
  }
  return v;
}

inline std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Complex parse_complex(std::string_view text) {
  const auto v = parse_reals(text);
  if (v.size() != 2) throw InputError("expected 're,im', got '" + std::string(text) + "'");
  return {v[0], v[1]};
}

/// One "re,im" per non-blank line.
inline std::vector<Complex> read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<Complex> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_complex(line));
    } catch (const InputError& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError("'" + path + "' holds no amplitudes");
  return out;
}

// Writes to the named file, or to `fallback` for "" and "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_{&fallback} {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw InputError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

inline nlohmann::ordered_json analysis_json(const TwoQubitState& s, double tol) {
  const StateRecord r = StateRecord::of(s, tol);
  nlohmann::ordered_json j;
  auto amps = nlohmann::ordered_json::array();
  for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
  j["amplitudes"] = std::move(amps);
  j["triad"] = {{"V", r.triad.V}, {"D", r.triad.D}, {"C", r.triad.C}};
  j["s4"] = r.coords.x;
  const ExtQuat q = stereo_project(quaternify(s));
  if (q.is_infinite()) {
    j["Q"] = "inf";
  } else {
    j["Q"] = q.finite().components();
  }
  j["ball"] = {{"x0", r.ball.x0}, {"x1", r.ball.x1}, {"x2", r.ball.x2}, {"radius", r.ball.radius}};
  auto labels = nlohmann::ordered_json::array();
  for (auto l : r.labels.labels()) labels.push_back(std::string(to_string(l)));
  j["labels"] = std::move(labels);
  return j;
}

/// Dataset columns followed by Q0..Q3 ("inf" at the north pole).
inline void analysis_csv(const TwoQubitState& s, double tol, std::ostream& out) {
  std::ostringstream header;
  write_csv_header(header);
  std::string h = header.str();
  h.pop_back();
  out << h << ",Q0,Q1,Q2,Q3\n";
  std::ostringstream row;
  write_csv_row(row, StateRecord::of(s, tol));
  std::string r = row.str();
  r.pop_back();
  out << r;
  const ExtQuat q = stereo_project(quaternify(s));
  for (std::size_t k = 0; k < 4; ++k) {
    out << ',' << (q.is_infinite() ? std::string("inf") : format_real(q.finite().components()[k]));
  }
  out << '\n';
}

inline void write_analysis(const TwoQubitState& s, DatasetFormat format, double tol,
                           std::ostream& out) {
  if (format == DatasetFormat::Json) {
    out << analysis_json(s, tol).dump(2) << '\n';
  } else {
    analysis_csv(s, tol, out);
  }
}

inline void print_report(const VerificationReport& report, std::ostream& out) {
  out << std::left;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << std::setw(28) << c.name << " samples=" << std::setw(8)
        << c.samples << " max_error=" << std::setw(24) << format_real(c.max_error)
        << " tolerance=" << format_real(c.tolerance) << '\n';
  }
  out << (report.passed() ? "overall: PASS" : "overall: FAIL") << '\n';
}

inline nlohmann::ordered_json report_json(const VerificationReport& report, std::size_t count,
                                          std::uint64_t seed, double tol) {
  nlohmann::ordered_json j;
  j["count"] = count;
  j["seed"] = seed;
  j["tolerance"] = tol;
  j["passed"] = report.passed();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"samples", c.samples},
                      {"max_error", c.max_error},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  j["checks"] = std::move(checks);
  return j;
}

/// Seed of shell level k, independent of the other levels.
inline std::uint64_t shell_seed(std::uint64_t seed, std::size_t level) {
  return substream_seed(mix64(seed ^ 0x5348454c4c53ULL), level);
}

inline std::vector<TwoQubitState> shell_dataset(const std::vector<double>& levels,
                                                std::size_t per_level, std::uint64_t seed,
                                                unsigned threads = 1) {
  std::vector<TwoQubitState> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto batch = sample_fixed_concurrence(
        {per_level, shell_seed(seed, k), ensemble::FixedConcurrence{levels[k]}}, threads);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duality triad and quaternionic Hopf geometry of two-qubit pure states",
               "hopfdual"};
  app.require_subcommand(1);

  double classify_tol = kDefaultClassifyTol;
  app.add_option("--classify-tolerance", classify_tol, "Stratum band width")
      ->check(CLI::PositiveNumber);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze one state");
  std::string state_text;
  bool normalize = false;
  std::string analyze_format = "json";
  analyze->add_option("--state", state_text, "r0,i0,r1,i1,r2,i2,r3,i3")->required();
  analyze->add_flag("--normalize", normalize, "Rescale to unit norm");
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "csv"}));

  // embed
  auto* embed = app.add_subcommand("embed", "Reduce mu|0>|chi1> + nu|1>|chi2> to two qubits");
  std::string mu_text, nu_text, chi1_path, chi2_path, embed_format = "json";
  bool embed_normalize = false;
  embed->add_option("--mu", mu_text, "re,im")->required();
  embed->add_option("--nu", nu_text, "re,im")->required();
  embed->add_option("--chi1", chi1_path, "File with one 're,im' per line")->required();
  embed->add_option("--chi2", chi2_path, "File with one 're,im' per line")->required();
  embed->add_flag("--normalize", embed_normalize, "Rescale mu, nu, chi1, chi2");
  embed->add_option("--format", embed_format)->check(CLI::IsMember({"json", "csv"}));

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a deterministic state ensemble");
  std::string ens_name = "haar", sample_out, sample_format = "csv";
  double fixed_c = 0.0;
  std::size_t sample_count = 1;
  std::uint64_t sample_seed = 0;
  unsigned sample_threads = 1;
  sample->add_option("--ensemble", ens_name)
      ->check(CLI::IsMember({"haar", "separable", "fixedc", "bloch"}));
  auto* c_opt = sample->add_option("--c", fixed_c, "Concurrence for --ensemble fixedc");
  sample->add_option("--count", sample_count)->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed);
  sample->add_option("--out", sample_out, "Output file (default stdout)");
  sample->add_option("--format", sample_format)->check(CLI::IsMember({"json", "csv"}));
  sample->add_option("--threads", sample_threads, "Worker threads (0 = all cores)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property sweep");
  std::size_t verify_count = 100000;
  std::uint64_t verify_seed = 0;
  double verify_tol = kDefaultVerifyTol;
  std::string verify_format = "text";
  unsigned verify_threads = 1;
  verify->add_option("--count", verify_count)->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed);
  verify->add_option("--tolerance", verify_tol)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--threads", verify_threads, "Sampling threads (0 = all cores)");

  // shells
  auto* shells = app.add_subcommand("shells", "Fixed-concurrence shell dataset");
  std::vector<double> levels;
  std::size_t per_level = 1000;
  std::uint64_t shells_seed = 0;
  std::string shells_out, shells_format = "csv";
  unsigned shells_threads = 1;
  shells->add_option("--levels", levels, "C1,C2,...")->required()->delimiter(',');
  shells->add_option("--count-per-level", per_level)->check(CLI::PositiveNumber);
  shells->add_option("--seed", shells_seed);
  shells->add_option("--out", shells_out, "Output file (default stdout)");
  shells->add_option("--format", shells_format)->check(CLI::IsMember({"json", "csv"}));
  shells->add_option("--threads", shells_threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto v = parse_reals(state_text);
      if (v.size() != 8) throw InputError("--state needs 8 comma-separated reals");
      const auto s = make_state({Complex{v[0], v[1]}, Complex{v[2], v[3]}, Complex{v[4], v[5]},
                                 Complex{v[6], v[7]}},
                                normalize);
      write_analysis(s, parse_format(analyze_format), classify_tol, out);
      return kExitOk;
    }
    if (embed->parsed()) {
      const Complex mu = parse_complex(mu_text);
      const Complex nu = parse_complex(nu_text);
      auto chi1 = read_complex_file(chi1_path);
      auto chi2 = read_complex_file(chi2_path);
      const CorrelatedState cs =
          embed_normalize ? CorrelatedState::normalized(mu, nu, std::move(chi1), std::move(chi2))
                          : CorrelatedState(mu, nu, std::move(chi1), std::move(chi2));
      write_analysis(embed_correlated(cs), parse_format(embed_format), classify_tol, out);
      return kExitOk;
    }
    if (sample->parsed()) {
      SampleSpec spec{sample_count, sample_seed, ensemble::Haar{}};
      if (ens_name == "separable") spec.ensemble = ensemble::Separable{};
      if (ens_name == "bloch") spec.ensemble = ensemble::BlochGrid{};
      if (ens_name == "fixedc") {
        if (c_opt->count() == 0) throw InputError("--ensemble fixedc requires --c");
        spec.ensemble = ensemble::FixedConcurrence{fixed_c};
      }
      const auto states = generate(spec, sample_threads);
      Sink sink{sample_out, out};
      emit_dataset(states, parse_format(sample_format), sink.stream(), classify_tol);
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto report = verify_suite(verify_count, verify_seed, verify_tol, {}, verify_threads);
      if (verify_format == "json") {
        out << report_json(report, verify_count, verify_seed, verify_tol).dump(2) << '\n';
      } else {
        print_report(report, out);
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
    if (shells->parsed()) {
      for (double c : levels) {
        if (!(c >= 0.0 && c <= 1.0)) throw InputError("--levels entries must lie in [0, 1]");
      }
      const auto states = shell_dataset(levels, per_level, shells_seed, shells_threads);
      Sink sink{shells_out, out};
      emit_dataset(states, parse_format(shells_format), sink.stream(), classify_tol);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hopfdual::cli
