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

#include "qdiv/gate.hpp"

#include <algorithm>
#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "X", "CNOT", "Toffoli", "Peres", "H", "T", "Tdg", "S", "Sdg"};

}  // namespace

std::string_view gate_name(GateKind kind) {
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (gate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Gate::Gate(GateKind kind, std::initializer_list<Qubit> operands)
    : Gate(kind, std::span<const Qubit>(operands.begin(), operands.size())) {}

Gate::Gate(GateKind kind, std::span<const Qubit> operands) : kind_(kind) {
  if (operands.size() != arity(kind)) {
    throw Error(ErrorCode::InvalidGate,
                std::string(gate_name(kind)) + " takes " +
                    std::to_string(arity(kind)) + " operands, got " +
                    std::to_string(operands.size()));
  }
  for (std::size_t i = 0; i < operands.size(); ++i) {
    for (std::size_t j = i + 1; j < operands.size(); ++j) {
      if (operands[i] == operands[j]) {
        throw Error(ErrorCode::InvalidGate,
                    std::string(gate_name(kind)) + " repeats qubit " +
                        std::to_string(operands[i]));
      }
    }
    operands_[i] = operands[i];
  }
}

Qubit Gate::max_operand() const noexcept {
  const auto ops = operands();
  return *std::max_element(ops.begin(), ops.end());
}

bool operator==(const Gate &lhs, const Gate &rhs) noexcept {
  return lhs.kind_ == rhs.kind_ &&
         std::equal(lhs.operands().begin(), lhs.operands().end(),
                    rhs.operands().begin());
}

}  // namespace qdiv
