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
#include "qdiv/refmodel.hpp"

using namespace qdiv;

namespace {

std::vector<bool> quotient_bits(const DivisionTrace &t) {
  std::vector<bool> bits;
  for (const auto &s : t.iterations) bits.push_back(s.quotient_bit);
  return bits;
}

ErrorCode code_of(std::uint64_t x, std::uint64_t d, std::size_t n) {
  try {
    restoring_divide(x, d, n);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected qdiv::Error";
  return ErrorCode::InvalidGate;
}

}  // namespace

TEST(restoring_divide, examples) {
  EXPECT_EQ(restoring_divide(13, 3, 4), (DivResult{4, 1}));
  EXPECT_EQ(restoring_divide(7, 2, 3), (DivResult{3, 1}));
  for (std::uint64_t d = 1; d <= 8; ++d) {
    EXPECT_EQ(restoring_divide(0, d, 4), (DivResult{0, 0}));
  }
}

TEST(restoring_divide, errors) {
  EXPECT_EQ(code_of(6, 0, 3), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of(8, 1, 3), ErrorCode::DomainViolation);
  EXPECT_EQ(code_of(1, 5, 3), ErrorCode::DomainViolation);
  EXPECT_EQ(code_of(1, 1, 0), ErrorCode::BadWidth);
  EXPECT_EQ(code_of(1, 1, 64), ErrorCode::BadWidth);
  EXPECT_NO_THROW(restoring_divide(7, 4, 3));
}

TEST(restoring_divide_trace, five_by_two) {
  const DivisionTrace t = restoring_divide_trace(5, 2, 3);
  ASSERT_EQ(t.iterations.size(), 3U);
  EXPECT_EQ(quotient_bits(t), (std::vector<bool>{false, true, false}));
  EXPECT_EQ(t.result.remainder, 1U);
  EXPECT_EQ(t.iterations[0].window_before, 1U);
  EXPECT_TRUE(t.iterations[0].sign);
  EXPECT_TRUE(t.iterations[0].restored);
}

TEST(restoring_divide_trace, zero_dividend_restores_every_iteration) {
  const DivisionTrace t = restoring_divide_trace(0, 1, 2);
  EXPECT_EQ(quotient_bits(t), (std::vector<bool>{false, false}));
  for (const auto &s : t.iterations) {
    EXPECT_TRUE(s.sign);
    EXPECT_TRUE(s.restored);
  }
  EXPECT_EQ(t.result, (DivResult{0, 0}));
}

TEST(restoring_divide_trace, divide_by_one_emits_binary_msb_first) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t x = 0; x < (1U << n); ++x) {
      const DivisionTrace t = restoring_divide_trace(x, 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(t.iterations[i].quotient_bit, static_cast<bool>((x >> (n - 1 - i)) & 1));
      }
      EXPECT_EQ(t.result.remainder, 0U);
    }
  }
}

TEST(restoring_divide, agrees_with_divmod_up_to_8_bits) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t d = 1; d <= max_valid_divisor(n); ++d) {
      for (std::uint64_t x = 0; x < (1U << n); ++x) {
        const DivResult r = restoring_divide(x, d, n);
        ASSERT_EQ(r.quotient, x / d);
        ASSERT_EQ(r.remainder, x % d);
        ASSERT_EQ(d * r.quotient + r.remainder, x);
        ASSERT_LT(r.remainder, d);
      }
    }
  }
}

TEST(restoring_datapath, out_of_domain_behaviour) {
  // Hand trace for n=3, D=5 (> 2^(n-1)), dividend 0:
  //   w=0 -> diff 3, sign 0, keep   -> w=3, q=1
  //   w=6 -> diff 1, sign 0, keep   -> w=1, q=1
  //   w=2 -> diff 5, sign 1, restore -> w=2, q=0
  const DivisionTrace t = restoring_datapath(0, 5, 3);
  EXPECT_EQ(t.result, (DivResult{6, 2}));
  EXPECT_NE(t.result, (DivResult{0, 0}));
}

TEST(restoring_datapath, wide_operands) {
  const std::uint64_t x = 0x7fffffffffffffffULL;
  const std::uint64_t d = 0x123456789ULL;
  const DivResult r = restoring_divide(x, d, 63);
  EXPECT_EQ(r.quotient, x / d);
  EXPECT_EQ(r.remainder, x % d);
}
