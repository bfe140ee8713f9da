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
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv {

/// T gates emitted per Toffoli (and per Peres, whose extra CNOT is T-free).
inline constexpr int kTPerToffoli = 7;

/// Peres(a, b, c) -> [Toffoli(a, b, c), CNOT(a, b)].
std::vector<Gate> decompose_peres(const Gate &gate);

/// Toffoli(a, b, c) -> the phase-exact 15-gate Clifford+T network
/// (2 H, 6 CNOT, 7 T/Tdg).
std::vector<Gate> decompose_toffoli(const Gate &gate);

/// Gate-by-gate substitution down to `target`. Lowering to the current level
/// is a copy; raising the level throws InvalidDirection.
Circuit lower(const Circuit &circuit, Level target);

}  // namespace qdiv
