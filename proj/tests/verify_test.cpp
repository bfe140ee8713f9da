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

#include <gtest/gtest.h>

#include "qdiv/errors.hpp"
#include "qdiv/verify.hpp"

using namespace qdiv;

TEST(verify, exhaustive_small_widths) {
  for (std::size_t n : {1U, 2U, 3U, 4U, 5U}) {
    const auto cases = exhaustive_cases(n);
    EXPECT_EQ(cases.size(), (std::size_t{1} << n) * max_valid_divisor(n));
    const SweepResult r = verify_cases(build_divider(n), cases);
    EXPECT_EQ(r.failed, 0U) << "n=" << n;
    EXPECT_EQ(r.passed, cases.size());
  }
  EXPECT_THROW(exhaustive_cases(6), Error);
}

TEST(verify, random_wide_operands) {
  for (std::size_t n : {8U, 16U, 32U}) {
    const auto cases = random_cases(n, 10000, 1234 + n);
    const SweepResult r = verify_cases(build_divider(n), cases, 4);
    EXPECT_EQ(r.failed, 0U) << "n=" << n;
    EXPECT_EQ(r.passed, 10000U);
  }
}

TEST(verify, random_cases_stay_in_domain_and_are_seeded) {
  const auto a = random_cases(6, 500, 7);
  const auto b = random_cases(6, 500, 7);
  ASSERT_EQ(a.size(), 500U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].dividend, b[i].dividend);
    EXPECT_EQ(a[i].divisor, b[i].divisor);
    EXPECT_LT(a[i].dividend, 64U);
    EXPECT_GE(a[i].divisor, 1U);
    EXPECT_LE(a[i].divisor, 32U);
  }
}

TEST(verify, result_independent_of_job_count) {
  const DividerInstance d = build_divider(3);
  std::vector<DivisionCase> cases;
  for (std::uint64_t div = 1; div < 8; ++div) {
    for (std::uint64_t x = 0; x < 8; ++x) cases.push_back({x, div});
  }
  const SweepResult one = verify_cases(d, cases, 1);
  const SweepResult many = verify_cases(d, cases, 7);
  EXPECT_EQ(one.passed, many.passed);
  EXPECT_EQ(one.failed, many.failed);
  ASSERT_TRUE(one.first_failure && many.first_failure);
  EXPECT_EQ(one.first_failure->input.dividend, many.first_failure->input.dividend);
  EXPECT_EQ(one.first_failure->input.divisor, many.first_failure->input.divisor);
}

TEST(simulate_division, reads_back_every_register) {
  const DividerInstance d = build_divider(8);
  const DivisionOutcome o = simulate_division(d, 200, 7);
  EXPECT_EQ(o.quotient, 28U);
  EXPECT_EQ(o.remainder, 4U);
  EXPECT_EQ(o.divisor, 7U);
  EXPECT_TRUE(o.divisor_preserved);
  EXPECT_TRUE(o.matches_datapath);
}

TEST(simulate_division, datapath_model_tracks_circuit_out_of_domain) {
  for (std::size_t n : {3U, 4U}) {
    const DividerInstance d = build_divider(n);
    for (std::uint64_t div = 0; div < (1U << n); ++div) {
      for (std::uint64_t x = 0; x < (1U << n); ++x) {
        const DivisionOutcome o = simulate_division(d, x, div);
        ASSERT_TRUE(o.matches_datapath) << x << "/" << div;
        ASSERT_TRUE(o.divisor_preserved);
      }
    }
  }
}

TEST(map_valid_domain, upper_half_divisors_fail) {
  for (std::size_t n : {3U, 4U}) {
    const DomainReport r = map_valid_domain(n);
    EXPECT_TRUE(r.matches_hypothesis);
    ASSERT_EQ(r.valid_divisors.size(), max_valid_divisor(n));
    EXPECT_EQ(r.valid_divisors.back(), max_valid_divisor(n));
    ASSERT_FALSE(r.invalid_divisors.empty());
    EXPECT_EQ(r.invalid_divisors.front(), max_valid_divisor(n) + 1);
    ASSERT_TRUE(r.counterexample.has_value());
    const auto &cx = *r.counterexample;
    EXPECT_GT(cx.input.divisor, max_valid_divisor(n));
    EXPECT_TRUE(cx.observed.quotient != cx.input.dividend / cx.input.divisor ||
                cx.observed.remainder != cx.input.dividend % cx.input.divisor);
  }
  const DomainReport three = map_valid_domain(3);
  EXPECT_EQ(three.total_pairs, 56U);
  EXPECT_EQ(three.counterexample->input.dividend, 0U);
  EXPECT_EQ(three.counterexample->input.divisor, 5U);
  EXPECT_EQ(three.counterexample->observed.quotient, 6U);
  EXPECT_EQ(three.counterexample->observed.remainder, 2U);
}
