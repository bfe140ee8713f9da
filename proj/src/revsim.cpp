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

#include "qdiv/revsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

constexpr std::uint64_t bit(std::uint64_t index, Qubit q) { return (index >> q) & 1U; }

void check_unitary_width(std::size_t width) {
  if (width > kUnitaryWidthLimit) {
    throw Error(ErrorCode::WidthLimitExceeded,
                "unitary of a " + std::to_string(width) + "-qubit circuit (limit " +
                    std::to_string(kUnitaryWidthLimit) + ")");
  }
}

}  // namespace

BasisState BasisState::from_index(std::size_t width, std::uint64_t value) {
  BasisState state(width);
  for (std::size_t q = 0; q < std::min<std::size_t>(width, 64); ++q) {
    state.set(q, (value >> q) & 1U);
  }
  return state;
}

void BasisState::write(std::span<const Qubit> qubits, std::uint64_t value) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    set(qubits[i], i < 64 && ((value >> i) & 1U));
  }
}

std::uint64_t BasisState::read(std::span<const Qubit> qubits) const {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < qubits.size() && i < 64; ++i) {
    value |= static_cast<std::uint64_t>(get(qubits[i])) << i;
  }
  return value;
}

std::uint64_t BasisState::to_index() const { return words_.empty() ? 0 : words_[0]; }

std::size_t StateVector::width() const noexcept {
  std::size_t w = 0;
  while ((std::size_t{1} << w) < amplitudes.size()) ++w;
  return w;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Amplitude &a : amplitudes) sum += std::norm(a);
  return sum;
}

std::uint64_t permute_index(const Gate &gate, std::uint64_t index) {
  const auto ops = gate.operands();
  switch (gate.kind()) {
    case GateKind::X:
      return index ^ (std::uint64_t{1} << ops[0]);
    case GateKind::CNOT:
      return index ^ (bit(index, ops[0]) << ops[1]);
    case GateKind::Toffoli:
      return index ^ ((bit(index, ops[0]) & bit(index, ops[1])) << ops[2]);
    case GateKind::Peres: {
      const std::uint64_t a = bit(index, ops[0]);
      const std::uint64_t b = bit(index, ops[1]);
      return index ^ (a << ops[1]) ^ ((a & b) << ops[2]);
    }
    default:
      throw Error(ErrorCode::NonPermutationGate,
                  std::string(gate_name(gate.kind())) + " is not a permutation gate");
  }
}

BasisState run_basis(const Circuit &circuit, BasisState state) {
  if (state.width() != circuit.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "basis state has " + std::to_string(state.width()) +
                    " qubits, circuit has " + std::to_string(circuit.width()));
  }
  for (const Gate &gate : circuit.gates()) {
    const auto ops = gate.operands();
    switch (gate.kind()) {
      case GateKind::X:
        state.flip(ops[0]);
        break;
      case GateKind::CNOT:
        if (state.get(ops[0])) state.flip(ops[1]);
        break;
      case GateKind::Toffoli:
        if (state.get(ops[0]) && state.get(ops[1])) state.flip(ops[2]);
        break;
      case GateKind::Peres:
        if (state.get(ops[0])) {
          if (state.get(ops[1])) state.flip(ops[2]);
          state.flip(ops[1]);
        }
        break;
      default:
        throw Error(ErrorCode::NonPermutationGate,
                    std::string(gate_name(gate.kind())) +
                        " needs the state-vector simulator");
    }
  }
  return state;
}

StateVector run_statevector(const Circuit &circuit, const BasisState &input,
                            std::size_t width_limit) {
  const std::size_t width = circuit.width();
  if (width > width_limit) {
    throw Error(ErrorCode::WidthLimitExceeded,
                std::to_string(width) + " qubits exceeds the state-vector limit of " +
                    std::to_string(width_limit));
  }
  if (input.width() != width) {
    throw Error(ErrorCode::WidthMismatch, "input width differs from circuit width");
  }
  const std::size_t dim = std::size_t{1} << width;
  StateVector state{std::vector<Amplitude>(dim)};
  state.amplitudes[input.to_index()] = 1.0;
  std::vector<Amplitude> scratch(dim);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Amplitude omega = std::polar(1.0, std::numbers::pi / 4);

  auto phase = [&](Qubit q, Amplitude factor) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (bit(i, q)) state.amplitudes[i] *= factor;
    }
  };

  for (const Gate &gate : circuit.gates()) {
    const Qubit q = gate.operand(0);
    switch (gate.kind()) {
      case GateKind::H: {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & mask) continue;
          const Amplitude lo = state.amplitudes[i];
          const Amplitude hi = state.amplitudes[i | mask];
          state.amplitudes[i] = (lo + hi) * inv_sqrt2;
          state.amplitudes[i | mask] = (lo - hi) * inv_sqrt2;
        }
        break;
      }
      case GateKind::T:
        phase(q, omega);
        break;
      case GateKind::Tdg:
        phase(q, std::conj(omega));
        break;
      case GateKind::S:
        phase(q, Amplitude(0.0, 1.0));
        break;
      case GateKind::Sdg:
        phase(q, Amplitude(0.0, -1.0));
        break;
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::Toffoli: {
        // Involutions: swap each amplitude pair whose controls are all set.
        const auto ops = gate.operands();
        const std::size_t target = std::size_t{1} << gate.target();
        std::size_t controls = 0;
        for (std::size_t k = 0; k + 1 < ops.size(); ++k) controls |= std::size_t{1} << ops[k];
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & target) == 0 && (i & controls) == controls) {
            std::swap(state.amplitudes[i], state.amplitudes[i | target]);
          }
        }
        break;
      }
      default:
        for (std::size_t i = 0; i < dim; ++i) {
          scratch[permute_index(gate, i)] = state.amplitudes[i];
        }
        state.amplitudes.swap(scratch);
    }
  }
  return state;
}

Matrix unitary_of(const Circuit &circuit) {
  check_unitary_width(circuit.width());
  const std::size_t dim = std::size_t{1} << circuit.width();
  Matrix m{dim, std::vector<Amplitude>(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector out = run_statevector(
        circuit, BasisState::from_index(circuit.width(), col), kUnitaryWidthLimit);
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = out.amplitudes[row];
  }
  return m;
}

double max_abs_difference(const Matrix &lhs, const Matrix &rhs) {
  if (lhs.dim != rhs.dim) {
    throw Error(ErrorCode::WidthMismatch, "matrices differ in dimension");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.data.size(); ++i) {
    worst = std::max(worst, std::abs(lhs.data[i] - rhs.data[i]));
  }
  return worst;
}

bool check_equivalence(const Circuit &lhs, const Circuit &rhs, double tolerance) {
  if (lhs.width() != rhs.width()) {
    throw Error(ErrorCode::WidthMismatch,
                std::to_string(lhs.width()) + " vs " + std::to_string(rhs.width()) +
                    " qubits");
  }
  check_unitary_width(lhs.width());
  return max_abs_difference(unitary_of(lhs), unitary_of(rhs)) <= tolerance;
}

}  // namespace qdiv
