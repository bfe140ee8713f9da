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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv::testing {

/// Random circuit over the gate kinds permitted at `level`. With
/// `permutation_only` only X, CNOT, Toffoli and Peres are drawn.
inline Circuit random_circuit(std::mt19937_64 &rng, std::size_t width,
                              std::size_t gates, Level level,
                              bool permutation_only = false) {
  std::vector<GateKind> kinds;
  for (GateKind k : kAllGateKinds) {
    if (!permitted_at(k, level)) continue;
    if (permutation_only && !is_permutation(k)) continue;
    if (arity(k) > width) continue;
    kinds.push_back(k);
  }
  Circuit c(width, level);
  std::vector<Qubit> qubits(width);
  std::iota(qubits.begin(), qubits.end(), Qubit{0});
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  for (std::size_t g = 0; g < gates && !kinds.empty(); ++g) {
    const GateKind kind = kinds[pick(rng)];
    std::shuffle(qubits.begin(), qubits.end(), rng);
    c.append(Gate(kind, std::span<const Qubit>(qubits.data(), arity(kind))));
  }
  return c;
}

inline std::vector<Qubit> range_of(Qubit begin, std::size_t n) {
  std::vector<Qubit> v(n);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

}  // namespace qdiv::testing
