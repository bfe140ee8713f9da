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
#include <string_view>
#include <vector>

#include "qdiv/gate.hpp"

namespace qdiv {

/// Abstraction level of a circuit, from most to least abstract.
enum class Level : int { Logical = 0, ToffoliCnot = 1, CliffordT = 2 };

std::string_view level_name(Level level);

/// Whether `kind` may appear in a circuit at `level`.
constexpr bool permitted_at(GateKind kind, Level level) {
  switch (level) {
    case Level::Logical:
      return true;
    case Level::ToffoliCnot:
      return kind != GateKind::Peres;
    case Level::CliffordT:
      return kind != GateKind::Peres && kind != GateKind::Toffoli;
  }
  return false;
}

/// Ordered gate list over a fixed number of qubits. Gates can only be
/// appended; every append is checked against the width and the level.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t width, Level level) : width_(width), level_(level) {}

  std::size_t width() const noexcept { return width_; }
  Level level() const noexcept { return level_; }
  const std::vector<Gate> &gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Throws OperandOutOfRange or LevelViolation.
  void append(const Gate &gate);
  /// Appends every gate of `other`, which must not be wider than this circuit.
  void append(const Circuit &other);

  friend bool operator==(const Circuit &, const Circuit &) = default;

 private:
  std::size_t width_ = 0;
  Level level_ = Level::Logical;
  std::vector<Gate> gates_;
};

inline Circuit new_circuit(std::size_t width, Level level) {
  return Circuit(width, level);
}

/// Value-returning append: the input circuit is left untouched.
inline Circuit append(Circuit circuit, const Gate &gate) {
  circuit.append(gate);
  return circuit;
}

}  // namespace qdiv
