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
#include <span>
#include <utility>
#include <vector>

#include "qdiv/circuit.hpp"
#include "qdiv/register_layout.hpp"

namespace qdiv {

/// Unfused ripple-carry adder together with the positions of the n CNOTs that
/// write the sum into b. Every other gate belongs to the carry chain, which
/// computes and uncomputes without net effect on either register.
struct AdderNetlist {
  Circuit circuit;  // ToffoliCnot level
  std::vector<std::size_t> sum_writes;
};

AdderNetlist build_adder_netlist(std::size_t n, std::span<const Qubit> a_bits,
                                 std::span<const Qubit> b_bits);

/// |a, b> -> |a, (a + b) mod 2^n>. No ancillae, no carry-out qubit, 2n-2
/// Toffoli-or-Peres gates. Each Toffoli immediately followed by its matching
/// sum-write CNOT is fused into a Peres gate.
Circuit build_adder(std::size_t n, std::span<const Qubit> a_bits,
                    std::span<const Qubit> b_bits);

/// |a, b> -> |a, (b - a) mod 2^n>, as NOT(NOT(b) + a).
Circuit build_subtractor(std::size_t n, std::span<const Qubit> a_bits,
                         std::span<const Qubit> b_bits);

/// |ctrl, a, b> -> |ctrl, a, b + ctrl*a mod 2^n>. Built from the adder netlist
/// by promoting each sum-write CNOT to a Toffoli on `ctrl`. 3n-2 Toffolis.
Circuit build_conditional_adder(std::size_t n, Qubit ctrl,
                                std::span<const Qubit> a_bits,
                                std::span<const Qubit> b_bits);

/// The n-qubit window that iteration `iteration` (1-based) subtracts from:
/// Q[n-i], ..., Q[n-1], R[0], ..., R[n-i-1], LSB first.
std::vector<Qubit> iteration_window(const RegisterLayout &layout,
                                    std::size_t iteration);

/// The zero qubit that receives iteration i's quotient bit: R[n-i].
Qubit iteration_spare(const RegisterLayout &layout, std::size_t iteration);

/// One restoring step: subtract D from the window, copy the sign onto the
/// spare qubit, add D back controlled on it, then flip the spare so it holds
/// the quotient bit. The fragment spans the full 3n qubits.
std::pair<Circuit, RegisterLayout> build_divider_iteration(
    std::size_t n, const RegisterLayout &layout, std::size_t iteration);

struct DividerInstance {
  std::size_t n = 0;
  Circuit circuit;
  RegisterLayout layout;

  std::size_t ancillae() const noexcept { return layout.r_bits.size(); }
};

/// Full n-iteration divider on 3n qubits. After the circuit runs the quotient
/// sits on the original R qubits and the remainder on the original Q qubits;
/// the layout records both maps.
DividerInstance build_divider(std::size_t n);

}  // namespace qdiv
