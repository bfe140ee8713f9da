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

#include "qdiv/lowering.hpp"

#include <string>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

void expect_kind(const Gate &gate, GateKind kind) {
  if (gate.kind() != kind) {
    throw Error(ErrorCode::WrongKind, "expected " + std::string(gate_name(kind)) +
                                          ", got " +
                                          std::string(gate_name(gate.kind())));
  }
}

}  // namespace

std::vector<Gate> decompose_peres(const Gate &gate) {
  expect_kind(gate, GateKind::Peres);
  const Qubit a = gate.operand(0);
  const Qubit b = gate.operand(1);
  const Qubit c = gate.operand(2);
  // c ^= ab must read b before the CNOT overwrites it.
  return {Gate::toffoli(a, b, c), Gate::cnot(a, b)};
}

std::vector<Gate> decompose_toffoli(const Gate &gate) {
  expect_kind(gate, GateKind::Toffoli);
  const Qubit a = gate.operand(0);
  const Qubit b = gate.operand(1);
  const Qubit c = gate.operand(2);
  return {
      Gate::h(c),          //
      Gate::cnot(b, c),    //
      Gate::tdg(c),        //
      Gate::cnot(a, c),    //
      Gate::t(c),          //
      Gate::cnot(b, c),    //
      Gate::tdg(c),        //
      Gate::cnot(a, c),    //
      Gate::t(b),          //
      Gate::t(c),          //
      Gate::h(c),          //
      Gate::cnot(a, b),    //
      Gate::t(a),          //
      Gate::tdg(b),        //
      Gate::cnot(a, b),    //
  };
}

Circuit lower(const Circuit &circuit, Level target) {
  if (target < circuit.level()) {
    throw Error(ErrorCode::InvalidDirection,
                "cannot raise " + std::string(level_name(circuit.level())) +
                    " to " + std::string(level_name(target)));
  }
  Circuit out(circuit.width(), target);

  auto emit_toffoli = [&](const Gate &g) {
    if (target == Level::CliffordT) {
      for (const Gate &d : decompose_toffoli(g)) out.append(d);
    } else {
      out.append(g);
    }
  };

  for (const Gate &gate : circuit.gates()) {
    switch (gate.kind()) {
      case GateKind::Peres:
        if (target == Level::Logical) {
          out.append(gate);
          break;
        }
        for (const Gate &d : decompose_peres(gate)) {
          if (d.kind() == GateKind::Toffoli) {
            emit_toffoli(d);
          } else {
            out.append(d);
          }
        }
        break;
      case GateKind::Toffoli:
        emit_toffoli(gate);
        break;
      default:
        out.append(gate);
    }
  }
  return out;
}

}  // namespace qdiv
