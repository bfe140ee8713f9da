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

#include "qdiv/resources.hpp"

#include "qdiv/errors.hpp"
#include "qdiv/lowering.hpp"

namespace qdiv {

namespace {

std::int64_t checked(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadWidth, "width must be >= 1");
  return static_cast<std::int64_t>(n);
}

}  // namespace

ResourceReport count(const Circuit &circuit, std::int64_t ancillae_declared) {
  ResourceReport report;
  report.ancillae = ancillae_declared;
  std::int64_t explicit_t = 0;
  for (const Gate &gate : circuit.gates()) {
    ++report.gate_histogram[std::string(gate_name(gate.kind()))];
    if (gate.kind() == GateKind::Toffoli || gate.kind() == GateKind::Peres) {
      ++report.toffoli_equivalents;
    } else if (is_t_like(gate.kind())) {
      ++explicit_t;
    }
  }
  report.t_count = kTPerToffoli * report.toffoli_equivalents + explicit_t;
  report.matches_prediction = report.t_count == report.predicted_t_count;
  return report;
}

ResourceReport with_divider_prediction(ResourceReport report, std::size_t n) {
  report.n = n;
  report.predicted_t_count = predicted_divider_tcount(n);
  report.matches_prediction = report.t_count == report.predicted_t_count;
  return report;
}

std::int64_t predicted_divider_tcount(std::size_t n) {
  const std::int64_t w = checked(n);
  return 35 * w * w - 28 * w;
}

std::int64_t predicted_subtractor_tcount(std::size_t n) {
  return 14 * checked(n) - 14;
}

std::int64_t predicted_conditional_adder_tcount(std::size_t n) {
  return 21 * checked(n) - 14;
}

ComparisonReport comparison_report(std::size_t n) {
  const std::int64_t w = checked(n);
  ComparisonReport r;
  r.n = n;
  r.proposed_ancillae = w;
  r.existing_ancillae = 2 * w;
  r.ancilla_improvement =
      100.0 * (1.0 - static_cast<double>(r.proposed_ancillae) /
                         static_cast<double>(r.existing_ancillae));
  r.proposed_tcount = predicted_divider_tcount(n);
  r.existing_tcount = kExistingDesignTCoefficient * w * w;
  r.tcount_improvement =
      100.0 * (1.0 - static_cast<double>(r.proposed_tcount) /
                         static_cast<double>(r.existing_tcount));
  return r;
}

nlohmann::json to_json(const ResourceReport &report) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto &[kind, n] : report.gate_histogram) histogram[kind] = n;
  return {
      {"n", report.n},
      {"t_count", report.t_count},
      {"toffoli_equivalents", report.toffoli_equivalents},
      {"ancillae", report.ancillae},
      {"gate_histogram", histogram},
      {"predicted_t_count", report.predicted_t_count},
      {"matches_prediction", report.matches_prediction},
  };
}

nlohmann::json to_json(const ComparisonReport &report) {
  return {
      {"n", report.n},
      {"proposed_ancillae", report.proposed_ancillae},
      {"existing_ancillae", report.existing_ancillae},
      {"ancilla_improvement", report.ancilla_improvement},
      {"proposed_tcount", report.proposed_tcount},
      {"existing_tcount", report.existing_tcount},
      {"existing_tcount_source", "published approximation, 400 n^2"},
      {"tcount_improvement", report.tcount_improvement},
  };
}

}  // namespace qdiv
