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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>

namespace qdiv {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { X, CNOT, Toffoli, Peres, H, T, Tdg, S, Sdg };

inline constexpr std::array<GateKind, 9> kAllGateKinds = {
    GateKind::X, GateKind::CNOT, GateKind::Toffoli, GateKind::Peres, GateKind::H,
    GateKind::T, GateKind::Tdg,  GateKind::S,       GateKind::Sdg};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

constexpr std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return 2;
    case GateKind::Toffoli:
    case GateKind::Peres:
      return 3;
    default:
      return 1;
  }
}

/// X, CNOT, Toffoli and Peres act on computational basis states as
/// permutations.
constexpr bool is_permutation(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CNOT ||
         kind == GateKind::Toffoli || kind == GateKind::Peres;
}

constexpr bool is_t_like(GateKind kind) {
  return kind == GateKind::T || kind == GateKind::Tdg;
}

/// A gate with its qubit operands. Controls come first and the target last.
/// Peres operands are (a, b, c) with action (a, b, c) -> (a, a^b, c^ab).
///
/// Construction validates arity and operand distinctness, so every Gate value
/// is well formed.
class Gate {
 public:
  Gate(GateKind kind, std::initializer_list<Qubit> operands);
  Gate(GateKind kind, std::span<const Qubit> operands);

  static Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
  static Gate cnot(Qubit control, Qubit target) {
    return Gate(GateKind::CNOT, {control, target});
  }
  static Gate toffoli(Qubit c0, Qubit c1, Qubit target) {
    return Gate(GateKind::Toffoli, {c0, c1, target});
  }
  static Gate peres(Qubit a, Qubit b, Qubit c) {
    return Gate(GateKind::Peres, {a, b, c});
  }
  static Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
  static Gate t(Qubit q) { return Gate(GateKind::T, {q}); }
  static Gate tdg(Qubit q) { return Gate(GateKind::Tdg, {q}); }
  static Gate s(Qubit q) { return Gate(GateKind::S, {q}); }
  static Gate sdg(Qubit q) { return Gate(GateKind::Sdg, {q}); }

  GateKind kind() const noexcept { return kind_; }
  std::span<const Qubit> operands() const noexcept {
    return {operands_.data(), arity(kind_)};
  }
  Qubit operand(std::size_t i) const { return operands_[i]; }
  Qubit target() const noexcept { return operands_[arity(kind_) - 1]; }
  Qubit max_operand() const noexcept;

  friend bool operator==(const Gate &lhs, const Gate &rhs) noexcept;

 private:
  GateKind kind_;
  std::array<Qubit, 3> operands_{};
};

}  // namespace qdiv
