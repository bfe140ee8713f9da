// Copyright 2026 The qdiv Authors
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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "qdiv/circuit.hpp"

namespace qdiv {

struct ResourceReport {
  std::size_t n = 0;
  std::int64_t t_count = 0;
  std::int64_t toffoli_equivalents = 0;
  std::int64_t ancillae = 0;
  std::map<std::string, std::int64_t> gate_histogram;
  std::int64_t predicted_t_count = 0;
  bool matches_prediction = true;
};

/// Histogram plus T accounting: 7 per Toffoli or Peres, 1 per T or Tdg.
/// Without a prediction the report predicts zero.
ResourceReport count(const Circuit &circuit, std::int64_t ancillae_declared);

/// Attaches the divider's closed-form prediction for width n.
ResourceReport with_divider_prediction(ResourceReport report, std::size_t n);

/// 35n^2 - 28n. Throws BadWidth for n = 0.
std::int64_t predicted_divider_tcount(std::size_t n);
/// 14n - 14, the per-iteration subtractor cost.
std::int64_t predicted_subtractor_tcount(std::size_t n);
/// 21n - 14, the per-iteration conditional adder cost.
std::int64_t predicted_conditional_adder_tcount(std::size_t n);

/// T-count coefficient of the QFT-based divider, quoted as a published
/// constant (approximately 400 n^2). It is not recomputed here.
inline constexpr std::int64_t kExistingDesignTCoefficient = 400;

struct ComparisonReport {
  std::size_t n = 0;
  std::int64_t proposed_ancillae = 0;
  std::int64_t existing_ancillae = 0;
  double ancilla_improvement = 0.0;  // percent
  std::int64_t proposed_tcount = 0;
  std::int64_t existing_tcount = 0;  // published approximation
  double tcount_improvement = 0.0;   // percent
};

ComparisonReport comparison_report(std::size_t n);

/// Limit of tcount_improvement as n grows: 1 - 35/400, in percent.
inline constexpr double kAsymptoticTCountImprovement = 91.25;

nlohmann::json to_json(const ResourceReport &report);
nlohmann::json to_json(const ComparisonReport &report);

}  // namespace qdiv
