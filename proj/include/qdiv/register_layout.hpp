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
#include <vector>

#include "qdiv/gate.hpp"

namespace qdiv {

/// Physical placement of the divider's registers. Every list is LSB first.
///
/// q_bits, r_bits and d_bits describe where the dividend, the zero-initialised
/// remainder ancillae and the divisor live at the start of the circuit.
/// quotient_bits and remainder_bits describe where the results can be read,
/// and grow as iterations are synthesized; once all n iterations have been
/// emitted both have length n.
struct RegisterLayout {
  std::vector<Qubit> q_bits;
  std::vector<Qubit> r_bits;
  std::vector<Qubit> d_bits;
  std::vector<Qubit> quotient_bits;
  std::vector<Qubit> remainder_bits;
  std::size_t completed_iterations = 0;

  std::size_t n() const noexcept { return q_bits.size(); }

  /// Standard placement: Q on [0, n), R on [n, 2n), D on [2n, 3n).
  static RegisterLayout standard(std::size_t n);

  /// Throws BadWidth or OverlappingRegisters if the invariants do not hold.
  void validate() const;

  bool complete() const noexcept { return completed_iterations == n(); }

  friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;
};

}  // namespace qdiv
