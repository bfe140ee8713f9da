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
#include <vector>

namespace qdiv {

struct DivResult {
  std::uint64_t quotient = 0;
  std::uint64_t remainder = 0;

  friend bool operator==(const DivResult &, const DivResult &) = default;
};

/// One loop iteration of the restoring datapath.
struct IterationSnapshot {
  std::uint64_t window_before = 0;  // shifted partial remainder, before R - D
  std::uint64_t difference = 0;     // (window_before - D) mod 2^n
  bool sign = false;                // MSB of difference
  bool restored = false;            // the conditional add fired
  bool quotient_bit = false;
  std::uint64_t window_after = 0;
};

struct DivisionTrace {
  std::vector<IterationSnapshot> iterations;
  DivResult result;
};

inline constexpr std::size_t kMaxRefWidth = 63;

/// Largest divisor for which n-bit sign detection is sound: 2^(n-1).
std::uint64_t max_valid_divisor(std::size_t n);

/// Throws BadWidth, DivisionByZero or DomainViolation for inputs outside
/// 0 <= dividend < 2^n, 1 <= divisor <= 2^(n-1).
void check_division_domain(std::uint64_t dividend, std::uint64_t divisor,
                           std::size_t n);

/// Bit-exact model of the restoring loop with n-bit modular arithmetic: the
/// left shift drops the window MSB into the next quotient slot, the sign of
/// R - D (not the sign of R) decides the restore. Accepts any n-bit operands
/// so that out-of-domain behaviour can be studied; the quotient bit is
/// computed the way the circuit computes it, including when the dropped MSB
/// was not zero.
DivisionTrace restoring_datapath(std::uint64_t dividend, std::uint64_t divisor,
                                 std::size_t n);

/// Domain-checked restoring division.
DivResult restoring_divide(std::uint64_t dividend, std::uint64_t divisor,
                           std::size_t n);
DivisionTrace restoring_divide_trace(std::uint64_t dividend,
                                     std::uint64_t divisor, std::size_t n);

}  // namespace qdiv
