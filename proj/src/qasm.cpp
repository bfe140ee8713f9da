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

#include "qdiv/qasm.hpp"

#include <sstream>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "x";
    case GateKind::CNOT:
      return "cx";
    case GateKind::Toffoli:
      return "ccx";
    case GateKind::H:
      return "h";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::Peres:
      break;
  }
  throw Error(ErrorCode::UnexportableGate,
              "Peres has no OpenQASM 2.0 primitive; lower the circuit first");
}

}  // namespace

std::string export_qasm(const Circuit &circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.width() << "];\n";
  for (const Gate &gate : circuit.gates()) {
    out << qasm_name(gate.kind());
    const char *sep = " ";
    for (Qubit q : gate.operands()) {
      out << sep << "q[" << q << ']';
      sep = ",";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qdiv
