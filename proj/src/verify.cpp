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

#include "qdiv/verify.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

#include "qdiv/errors.hpp"

namespace qdiv {

BasisState divider_input(const DividerInstance &divider, std::uint64_t dividend,
                         std::uint64_t divisor) {
  BasisState state(divider.circuit.width());
  state.write(divider.layout.q_bits, dividend);
  state.write(divider.layout.d_bits, divisor);
  return state;
}

DivisionOutcome simulate_division(const DividerInstance &divider,
                                  std::uint64_t dividend, std::uint64_t divisor) {
  const RegisterLayout &layout = divider.layout;
  const BasisState out =
      run_basis(divider.circuit, divider_input(divider, dividend, divisor));

  DivisionOutcome outcome;
  outcome.quotient = out.read(layout.quotient_bits);
  outcome.remainder = out.read(layout.remainder_bits);
  outcome.divisor = out.read(layout.d_bits);
  outcome.divisor_preserved = outcome.divisor == divisor;

  const DivResult model = restoring_datapath(dividend, divisor, divider.n).result;
  BasisState predicted(out.width());
  predicted.write(layout.quotient_bits, model.quotient);
  predicted.write(layout.remainder_bits, model.remainder);
  predicted.write(layout.d_bits, divisor);
  outcome.matches_datapath = predicted == out;
  return outcome;
}

namespace {

bool passes(const DivisionCase &c, const DivisionOutcome &o) {
  return o.divisor_preserved && o.matches_datapath &&
         o.quotient == c.dividend / c.divisor &&
         o.remainder == c.dividend % c.divisor;
}

}  // namespace

SweepResult verify_cases(const DividerInstance &divider,
                         const std::vector<DivisionCase> &cases,
                         std::size_t jobs) {
  std::vector<DivisionOutcome> outcomes(cases.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cases.size(), 1));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      outcomes[i] = simulate_division(divider, cases[i].dividend, cases[i].divisor);
    }
  };
  if (jobs == 1) {
    work(0, cases.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (cases.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < cases.size(); begin += chunk) {
      workers.emplace_back(work, begin, std::min(cases.size(), begin + chunk));
    }
  }

  SweepResult result;
  result.n = divider.n;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const DivisionCase &c = cases[i];
    if (c.divisor != 0 && passes(c, outcomes[i])) {
      ++result.passed;
      continue;
    }
    ++result.failed;
    if (!result.first_failure) {
      DivResult expected;
      if (c.divisor != 0) expected = {c.dividend / c.divisor, c.dividend % c.divisor};
      result.first_failure = Counterexample{c, outcomes[i], expected};
    }
  }
  return result;
}

std::vector<DivisionCase> exhaustive_cases(std::size_t n) {
  if (n == 0 || n > kMaxExhaustiveWidth) {
    throw Error(ErrorCode::BadWidth, "exhaustive sweeps are limited to 1 <= n <= " +
                                         std::to_string(kMaxExhaustiveWidth));
  }
  std::vector<DivisionCase> cases;
  const std::uint64_t top = max_valid_divisor(n);
  for (std::uint64_t d = 1; d <= top; ++d) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) cases.push_back({x, d});
  }
  return cases;
}

std::vector<DivisionCase> random_cases(std::size_t n, std::size_t samples,
                                       std::uint64_t seed) {
  const std::uint64_t top = max_valid_divisor(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dividend(0, (top << 1) - 1);
  std::uniform_int_distribution<std::uint64_t> divisor(1, top);
  std::vector<DivisionCase> cases(samples);
  for (auto &c : cases) {
    c.dividend = dividend(rng);
    c.divisor = divisor(rng);
  }
  return cases;
}

DomainReport map_valid_domain(std::size_t n) {
  if (n == 0 || n > kMaxExhaustiveWidth) {
    throw Error(ErrorCode::BadWidth, "domain mapping is limited to 1 <= n <= " +
                                         std::to_string(kMaxExhaustiveWidth));
  }
  const DividerInstance divider = build_divider(n);
  DomainReport report;
  report.n = n;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t d = 1; d < size; ++d) {
    std::vector<DivisionCase> cases;
    for (std::uint64_t x = 0; x < size; ++x) cases.push_back({x, d});
    const SweepResult sweep = verify_cases(divider, cases);
    report.total_pairs += cases.size();
    report.failing_pairs += sweep.failed;
    if (sweep.failed == 0) {
      report.valid_divisors.push_back(d);
    } else {
      report.invalid_divisors.push_back(d);
      if (!report.counterexample) report.counterexample = sweep.first_failure;
    }
  }
  const std::uint64_t top = max_valid_divisor(n);
  report.matches_hypothesis = report.valid_divisors.size() == top &&
                              report.valid_divisors.front() == 1 &&
                              report.valid_divisors.back() == top;
  return report;
}

}  // namespace qdiv
