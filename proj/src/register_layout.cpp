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

#include "qdiv/register_layout.hpp"

#include <set>
#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

RegisterLayout RegisterLayout::standard(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadWidth, "register width must be >= 1");
  RegisterLayout layout;
  for (std::size_t i = 0; i < n; ++i) {
    layout.q_bits.push_back(static_cast<Qubit>(i));
    layout.r_bits.push_back(static_cast<Qubit>(n + i));
    layout.d_bits.push_back(static_cast<Qubit>(2 * n + i));
  }
  // Before any iteration the partial remainder is the all-zero R register.
  layout.remainder_bits = layout.r_bits;
  return layout;
}

void RegisterLayout::validate() const {
  const std::size_t width = n();
  if (width == 0 || r_bits.size() != width || d_bits.size() != width) {
    throw Error(ErrorCode::BadWidth, "Q, R and D must share a non-zero width");
  }
  std::set<Qubit> inputs;
  for (const auto *reg : {&q_bits, &r_bits, &d_bits}) {
    inputs.insert(reg->begin(), reg->end());
  }
  if (inputs.size() != 3 * width) {
    throw Error(ErrorCode::OverlappingRegisters,
                "Q, R and D must cover 3n distinct qubits");
  }
  for (const auto *reg : {&quotient_bits, &remainder_bits}) {
    if (reg->size() > width) {
      throw Error(ErrorCode::BadWidth, "output register longer than n");
    }
    for (Qubit q : *reg) {
      if (!inputs.count(q)) {
        throw Error(ErrorCode::OperandOutOfRange,
                    "output qubit " + std::to_string(q) + " is not a register qubit");
      }
    }
  }
  if (completed_iterations > width) {
    throw Error(ErrorCode::LayoutExhausted, "more iterations than register bits");
  }
}

}  // namespace qdiv
