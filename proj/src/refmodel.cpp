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

#include "qdiv/refmodel.hpp"

#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

void check_width(std::size_t n) {
  if (n == 0 || n > kMaxRefWidth) {
    throw Error(ErrorCode::BadWidth,
                "width must be in 1.." + std::to_string(kMaxRefWidth));
  }
}

}  // namespace

std::uint64_t max_valid_divisor(std::size_t n) {
  check_width(n);
  return std::uint64_t{1} << (n - 1);
}

void check_division_domain(std::uint64_t dividend, std::uint64_t divisor,
                           std::size_t n) {
  check_width(n);
  if (divisor == 0) throw Error(ErrorCode::DivisionByZero, "divisor is zero");
  if (dividend >> n) {
    throw Error(ErrorCode::DomainViolation,
                "dividend " + std::to_string(dividend) + " does not fit in " +
                    std::to_string(n) + " bits");
  }
  if (divisor > max_valid_divisor(n)) {
    throw Error(ErrorCode::DomainViolation,
                "divisor " + std::to_string(divisor) + " exceeds 2^(n-1) = " +
                    std::to_string(max_valid_divisor(n)) +
                    "; valid domain is 0 <= dividend < 2^n, 1 <= divisor <= 2^(n-1)");
  }
}

DivisionTrace restoring_datapath(std::uint64_t dividend, std::uint64_t divisor,
                                 std::size_t n) {
  check_width(n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t msb = std::uint64_t{1} << (n - 1);
  dividend &= mask;
  divisor &= mask;

  DivisionTrace trace;
  std::uint64_t window = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    IterationSnapshot snap;
    // The shift drops the window MSB; that qubit becomes this iteration's
    // quotient slot and is assumed zero.
    const bool dropped = window & msb;
    const bool next_bit = (dividend >> (n - i)) & 1U;
    window = ((window << 1) & mask) | static_cast<std::uint64_t>(next_bit);
    snap.window_before = window;
    snap.difference = (window - divisor) & mask;
    snap.sign = snap.difference & msb;
    snap.restored = dropped != snap.sign;
    window = snap.restored ? (snap.difference + divisor) & mask : snap.difference;
    snap.quotient_bit = !snap.restored;
    snap.window_after = window;
    trace.result.quotient = (trace.result.quotient << 1) | snap.quotient_bit;
    trace.iterations.push_back(snap);
  }
  trace.result.remainder = window;
  return trace;
}

DivisionTrace restoring_divide_trace(std::uint64_t dividend,
                                     std::uint64_t divisor, std::size_t n) {
  check_division_domain(dividend, divisor, n);
  return restoring_datapath(dividend, divisor, n);
}

DivResult restoring_divide(std::uint64_t dividend, std::uint64_t divisor,
                           std::size_t n) {
  return restoring_divide_trace(dividend, divisor, n).result;
}

}  // namespace qdiv
