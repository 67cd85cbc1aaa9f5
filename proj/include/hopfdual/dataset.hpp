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

// Flat-file records, one per state:
//   alpha0_re, alpha0_im, ..., alpha3_im, V, D, C, x0..x4, radius, labels
// Reals are printed with 17 significant digits, labels joined by ';'.

#include <array>
#include <charconv>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "classify.hpp"
#include "projection.hpp"
#include "state.hpp"

namespace hopfdual {

enum class DatasetFormat { Csv, Json };

inline DatasetFormat parse_format(std::string_view s) {
  if (s == "csv") return DatasetFormat::Csv;
  if (s == "json") return DatasetFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv or json)");
}

inline constexpr std::array<std::string_view, 18> kDatasetColumns{
    "alpha0_re", "alpha0_im", "alpha1_re", "alpha1_im", "alpha2_re", "alpha2_im",
    "alpha3_re", "alpha3_im", "V",         "D",         "C",         "x0",
    "x1",        "x2",        "x3",        "x4",        "radius",    "labels"};

/// printf("%.17g") equivalent, independent of the global locale.
inline std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return {buf.data(), end};
}

/// Everything the emitters and the CLI report about one state.
struct StateRecord {
  TwoQubitState state;
  DualityTriad triad;
  S4Point coords;
  BallPoint ball;
  StratumSet labels;

  static StateRecord of(const TwoQubitState& s, double tol = kDefaultClassifyTol) {
    return {s, hopfdual::triad(s), coords_from_state(s), ball_point(s), classify(s, tol)};
  }

  std::array<double, 17> numeric_fields() const {
    const auto& a = state.amplitudes();
    return {a[0].real(), a[0].imag(), a[1].real(), a[1].imag(), a[2].real(), a[2].imag(),
            a[3].real(), a[3].imag(), triad.V,     triad.D,     triad.C,     coords[0],
            coords[1],   coords[2],   coords[3],   coords[4],   ball.radius};
  }
};

inline void write_csv_header(std::ostream& out) {
  for (std::size_t i = 0; i < kDatasetColumns.size(); ++i) {
    if (i) out << ',';
    out << kDatasetColumns[i];
  }
  out << '\n';
}

inline void write_csv_row(std::ostream& out, const StateRecord& r) {
  for (double v : r.numeric_fields()) out << format_real(v) << ',';
  out << r.labels.join(";") << '\n';
}

inline nlohmann::ordered_json to_json(const StateRecord& r) {
  nlohmann::ordered_json j;
  const auto f = r.numeric_fields();
  for (std::size_t i = 0; i < f.size(); ++i) j[std::string(kDatasetColumns[i])] = f[i];
  auto labels = nlohmann::ordered_json::array();
  for (auto s : r.labels.labels()) labels.push_back(std::string(to_string(s)));
  j["labels"] = std::move(labels);
  return j;
}

/// Writes one record per state. Throws std::runtime_error if the stream
/// reports a failure.
inline void emit_dataset(std::span<const TwoQubitState> states, DatasetFormat format,
                         std::ostream& out, double tol = kDefaultClassifyTol) {
  if (format == DatasetFormat::Csv) {
    write_csv_header(out);
    for (const auto& s : states) write_csv_row(out, StateRecord::of(s, tol));
  } else {
    // Streamed record by record so large datasets are never held as a tree.
    out << '[';
    bool first = true;
    for (const auto& s : states) {
      out << (first ? "\n" : ",\n") << to_json(StateRecord::of(s, tol)).dump();
      first = false;
    }
    out << (first ? "]\n" : "\n]\n");
  }
  out.flush();
  if (!out) throw std::runtime_error("emit_dataset: write to destination failed");
}

}  // namespace hopfdual
