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

#include "qdiv/circuit.hpp"

#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

std::string_view level_name(Level level) {
  switch (level) {
    case Level::Logical:
      return "logical";
    case Level::ToffoliCnot:
      return "toffoli";
    case Level::CliffordT:
      return "cliffordt";
  }
  return "unknown";
}

void Circuit::append(const Gate &gate) {
  if (gate.max_operand() >= width_) {
    throw Error(ErrorCode::OperandOutOfRange,
                std::string(gate_name(gate.kind())) + " touches qubit " +
                    std::to_string(gate.max_operand()) + " of a " +
                    std::to_string(width_) + "-qubit circuit");
  }
  if (!permitted_at(gate.kind(), level_)) {
    throw Error(ErrorCode::LevelViolation,
                std::string(gate_name(gate.kind())) + " is not allowed at level " +
                    std::string(level_name(level_)));
  }
  gates_.push_back(gate);
}

void Circuit::append(const Circuit &other) {
  gates_.reserve(gates_.size() + other.size());
  for (const Gate &g : other.gates()) append(g);
}

}  // namespace qdiv
