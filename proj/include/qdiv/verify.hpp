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
#include <optional>
#include <vector>

#include "qdiv/arith.hpp"
#include "qdiv/refmodel.hpp"
#include "qdiv/revsim.hpp"

namespace qdiv {

/// Register contents read back from the simulated divider.
struct DivisionOutcome {
  std::uint64_t quotient = 0;
  std::uint64_t remainder = 0;
  std::uint64_t divisor = 0;
  bool divisor_preserved = false;
  /// Every qubit matches the bit-exact datapath model.
  bool matches_datapath = false;
};

BasisState divider_input(const DividerInstance &divider, std::uint64_t dividend,
                         std::uint64_t divisor);

/// Runs the logical divider on one input by permutation simulation.
DivisionOutcome simulate_division(const DividerInstance &divider,
                                  std::uint64_t dividend, std::uint64_t divisor);

struct DivisionCase {
  std::uint64_t dividend = 0;
  std::uint64_t divisor = 0;
};

struct Counterexample {
  DivisionCase input;
  DivisionOutcome observed;
  DivResult expected;
};

struct SweepResult {
  std::size_t n = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;
};

/// A case passes when the circuit output equals integer divmod, the divisor
/// comes back unchanged, and every qubit agrees with the datapath model.
/// Work is split across `jobs` threads; the result does not depend on it.
SweepResult verify_cases(const DividerInstance &divider,
                         const std::vector<DivisionCase> &cases,
                         std::size_t jobs = 1);

inline constexpr std::size_t kMaxExhaustiveWidth = 5;

/// All dividends in [0, 2^n) against all divisors in [1, 2^(n-1)].
std::vector<DivisionCase> exhaustive_cases(std::size_t n);

/// Dividends uniform on [0, 2^n), divisors uniform on [1, 2^(n-1)].
std::vector<DivisionCase> random_cases(std::size_t n, std::size_t samples,
                                       std::uint64_t seed);

/// Empirical map of which divisors give correct results for every dividend.
struct DomainReport {
  std::size_t n = 0;
  std::vector<std::uint64_t> valid_divisors;    // all dividends correct
  std::vector<std::uint64_t> invalid_divisors;  // at least one failure
  std::size_t failing_pairs = 0;
  std::size_t total_pairs = 0;
  std::optional<Counterexample> counterexample;
  /// valid_divisors is exactly [1, 2^(n-1)].
  bool matches_hypothesis = false;
};

/// Exhaustive over dividend in [0, 2^n) and divisor in [1, 2^n).
DomainReport map_valid_domain(std::size_t n);

}  // namespace qdiv
