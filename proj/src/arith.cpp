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

#include "qdiv/arith.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

void check_registers(std::size_t n, std::span<const Qubit> a_bits,
                     std::span<const Qubit> b_bits) {
  if (n == 0) throw Error(ErrorCode::BadWidth, "adder width must be >= 1");
  if (a_bits.size() != n || b_bits.size() != n) {
    throw Error(ErrorCode::BadWidth, "register length differs from n = " +
                                         std::to_string(n));
  }
  std::set<Qubit> seen(a_bits.begin(), a_bits.end());
  seen.insert(b_bits.begin(), b_bits.end());
  if (seen.size() != 2 * n) {
    throw Error(ErrorCode::OverlappingRegisters,
                "a and b must be 2n distinct qubits");
  }
}

std::size_t span_width(std::span<const Qubit> a_bits,
                       std::span<const Qubit> b_bits) {
  Qubit top = 0;
  for (Qubit q : a_bits) top = std::max(top, q);
  for (Qubit q : b_bits) top = std::max(top, q);
  return static_cast<std::size_t>(top) + 1;
}

}  // namespace

AdderNetlist build_adder_netlist(std::size_t n, std::span<const Qubit> a,
                                 std::span<const Qubit> b) {
  check_registers(n, a, b);
  AdderNetlist net{Circuit(span_width(a, b), Level::ToffoliCnot), {}};
  Circuit &c = net.circuit;
  auto sum_write = [&](std::size_t i) {
    net.sum_writes.push_back(c.size());
    c.append(Gate::cnot(a[i], b[i]));
  };

  // b[i] <- a[i] ^ b[i] for i >= 1.
  for (std::size_t i = 1; i < n; ++i) c.append(Gate::cnot(a[i], b[i]));
  // a[i+1] <- a[i+1] ^ a[i], top down so each step reads an untouched a[i].
  for (std::size_t i = n - 1; i-- > 1;) {
    c.append(Gate::cnot(a[i], a[i + 1]));
  }
  // Carry ripple: afterwards a[i] holds a[i] ^ carry_i for i >= 1.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.append(Gate::toffoli(a[i], b[i], a[i + 1]));
  }
  // Walk back down: b[i] <- b[i] ^ carry_i, then uncompute carry_i.
  for (std::size_t i = n - 1; i >= 1; --i) {
    sum_write(i);
    c.append(Gate::toffoli(a[i - 1], b[i - 1], a[i]));
  }
  sum_write(0);
  for (std::size_t i = 1; i + 1 < n; ++i) c.append(Gate::cnot(a[i], a[i + 1]));
  // b[i] <- a[i] ^ b[i] ^ carry_i.
  for (std::size_t i = 1; i < n; ++i) c.append(Gate::cnot(a[i], b[i]));
  return net;
}

Circuit build_adder(std::size_t n, std::span<const Qubit> a,
                    std::span<const Qubit> b) {
  const AdderNetlist net = build_adder_netlist(n, a, b);
  const auto &gates = net.circuit.gates();
  Circuit out(net.circuit.width(), Level::Logical);
  std::size_t next_sum = 0;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const bool fusable =
        gates[k].kind() == GateKind::Toffoli && k + 1 < gates.size() &&
        next_sum < net.sum_writes.size() && net.sum_writes[next_sum] == k + 1 &&
        gates[k].operand(0) == gates[k + 1].operand(0) &&
        gates[k].operand(1) == gates[k + 1].operand(1);
    if (fusable) {
      out.append(Gate::peres(gates[k].operand(0), gates[k].operand(1),
                             gates[k].operand(2)));
      ++next_sum;
      ++k;
      continue;
    }
    if (next_sum < net.sum_writes.size() && net.sum_writes[next_sum] == k) {
      ++next_sum;
    }
    out.append(gates[k]);
  }
  return out;
}

Circuit build_subtractor(std::size_t n, std::span<const Qubit> a,
                         std::span<const Qubit> b) {
  Circuit adder = build_adder(n, a, b);
  Circuit out(adder.width(), Level::Logical);
  for (Qubit q : b) out.append(Gate::x(q));
  out.append(adder);
  for (Qubit q : b) out.append(Gate::x(q));
  return out;
}

Circuit build_conditional_adder(std::size_t n, Qubit ctrl,
                                std::span<const Qubit> a,
                                std::span<const Qubit> b) {
  const AdderNetlist net = build_adder_netlist(n, a, b);
  if (std::find(a.begin(), a.end(), ctrl) != a.end() ||
      std::find(b.begin(), b.end(), ctrl) != b.end()) {
    throw Error(ErrorCode::CtrlOverlap,
                "control qubit " + std::to_string(ctrl) + " is a register qubit");
  }
  Circuit out(std::max<std::size_t>(net.circuit.width(), ctrl + std::size_t{1}),
              Level::Logical);
  std::size_t next_sum = 0;
  const auto &gates = net.circuit.gates();
  for (std::size_t k = 0; k < gates.size(); ++k) {
    if (next_sum < net.sum_writes.size() && net.sum_writes[next_sum] == k) {
      out.append(Gate::toffoli(ctrl, gates[k].operand(0), gates[k].operand(1)));
      ++next_sum;
    } else {
      out.append(gates[k]);
    }
  }
  return out;
}

std::vector<Qubit> iteration_window(const RegisterLayout &layout,
                                    std::size_t iteration) {
  const std::size_t n = layout.n();
  if (iteration == 0 || iteration > n) {
    throw Error(ErrorCode::LayoutExhausted,
                "iteration " + std::to_string(iteration) + " outside 1.." +
                    std::to_string(n));
  }
  std::vector<Qubit> window;
  window.reserve(n);
  for (std::size_t k = n - iteration; k < n; ++k) window.push_back(layout.q_bits[k]);
  for (std::size_t k = 0; k + iteration < n; ++k) window.push_back(layout.r_bits[k]);
  return window;
}

Qubit iteration_spare(const RegisterLayout &layout, std::size_t iteration) {
  const std::size_t n = layout.n();
  if (iteration == 0 || iteration > n) {
    throw Error(ErrorCode::LayoutExhausted,
                "no spare zero qubit left for iteration " + std::to_string(iteration));
  }
  return layout.r_bits[n - iteration];
}

std::pair<Circuit, RegisterLayout> build_divider_iteration(
    std::size_t n, const RegisterLayout &layout, std::size_t iteration) {
  layout.validate();
  if (layout.n() != n) {
    throw Error(ErrorCode::BadWidth, "layout width differs from n = " +
                                         std::to_string(n));
  }
  if (iteration != layout.completed_iterations + 1) {
    throw Error(ErrorCode::LayoutExhausted,
                "iteration " + std::to_string(iteration) + " requested after " +
                    std::to_string(layout.completed_iterations) + " completed");
  }
  const std::vector<Qubit> window = iteration_window(layout, iteration);
  const Qubit spare = iteration_spare(layout, iteration);
  const std::span<const Qubit> divisor(layout.d_bits);

  Circuit fragment(3 * n, Level::Logical);
  fragment.append(build_subtractor(n, divisor, window));
  fragment.append(Gate::cnot(window.back(), spare));
  fragment.append(build_conditional_adder(n, spare, divisor, window));
  fragment.append(Gate::x(spare));

  RegisterLayout next = layout;
  next.completed_iterations = iteration;
  next.remainder_bits = window;
  // Iteration i yields quotient bit n-i; keep the list LSB first.
  next.quotient_bits.insert(next.quotient_bits.begin(), spare);
  return {std::move(fragment), std::move(next)};
}

DividerInstance build_divider(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadWidth, "divider width must be >= 1");
  DividerInstance divider{n, Circuit(3 * n, Level::Logical),
                          RegisterLayout::standard(n)};
  for (std::size_t i = 1; i <= n; ++i) {
    auto [fragment, layout] = build_divider_iteration(n, divider.layout, i);
    divider.circuit.append(fragment);
    divider.layout = std::move(layout);
  }
  return divider;
}

}  // namespace qdiv
