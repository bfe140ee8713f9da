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

#include <string>

#include "qdiv/circuit.hpp"

namespace qdiv {

/// Serializes to OpenQASM 2.0 with a single register `q`. Output is
/// deterministic and uses LF line endings. Throws UnexportableGate when the
/// circuit contains a Peres gate, which has no qelib1 primitive.
std::string export_qasm(const Circuit &circuit);

}  // namespace qdiv
