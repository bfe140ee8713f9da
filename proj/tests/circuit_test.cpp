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

#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qdiv/circuit.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/qasm.hpp"
#include "qdiv/register_layout.hpp"
#include "test_util.hpp"

using namespace qdiv;

namespace {

template <typename F>
ErrorCode code_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected qdiv::Error";
  return ErrorCode::InvalidGate;
}

// Body lines of an exported program: everything after the qreg declaration.
std::size_t qasm_body_lines(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t body = 0;
  bool in_body = false;
  while (std::getline(in, line)) {
    if (in_body && !line.empty() && line.back() == ';') ++body;
    if (line.rfind("qreg ", 0) == 0) in_body = true;
  }
  return body;
}

}  // namespace

TEST(gate, arity_and_distinct_operands) {
  EXPECT_EQ(Gate::toffoli(0, 1, 2).operands().size(), 3U);
  EXPECT_EQ(Gate::x(4).target(), 4U);
  EXPECT_EQ(code_of([] { Gate(GateKind::CNOT, {1}); }), ErrorCode::InvalidGate);
  EXPECT_EQ(code_of([] { Gate::toffoli(0, 1, 0); }), ErrorCode::InvalidGate);
  EXPECT_EQ(code_of([] { Gate::cnot(3, 3); }), ErrorCode::InvalidGate);
}

TEST(gate, names_round_trip) {
  for (GateKind k : kAllGateKinds) {
    EXPECT_EQ(gate_kind_from_name(gate_name(k)), k);
  }
  EXPECT_FALSE(gate_kind_from_name("ccz").has_value());
}

TEST(circuit, new_circuit_is_empty) {
  const Circuit zero = new_circuit(0, Level::Logical);
  EXPECT_EQ(zero.width(), 0U);
  EXPECT_TRUE(zero.empty());

  const Circuit shell = new_circuit(12, Level::Logical);
  EXPECT_EQ(shell.width(), 12U);
  EXPECT_EQ(shell.size(), 0U);

  const Circuit ct = new_circuit(3, Level::CliffordT);
  EXPECT_EQ(ct.level(), Level::CliffordT);
  EXPECT_TRUE(ct.empty());
}

TEST(circuit, append_preserves_order_and_input) {
  const Circuit empty = new_circuit(3, Level::Logical);
  const Circuit one = append(empty, Gate::toffoli(0, 1, 2));
  EXPECT_EQ(one.size(), 1U);
  EXPECT_TRUE(empty.empty());
  const Circuit two = append(one, Gate::x(1));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two.gates()[0], Gate::toffoli(0, 1, 2));
  EXPECT_EQ(two.gates()[1], Gate::x(1));
}

TEST(circuit, append_rejects_out_of_range_operand) {
  EXPECT_EQ(code_of([] { append(new_circuit(3, Level::Logical), Gate::cnot(0, 5)); }),
            ErrorCode::OperandOutOfRange);
  EXPECT_EQ(code_of([] { append(new_circuit(0, Level::Logical), Gate::x(0)); }),
            ErrorCode::OperandOutOfRange);
}

TEST(circuit, append_enforces_level) {
  EXPECT_EQ(code_of([] { append(new_circuit(3, Level::CliffordT), Gate::peres(0, 1, 2)); }),
            ErrorCode::LevelViolation);
  EXPECT_EQ(code_of([] { append(new_circuit(3, Level::CliffordT), Gate::toffoli(0, 1, 2)); }),
            ErrorCode::LevelViolation);
  EXPECT_EQ(code_of([] { append(new_circuit(3, Level::ToffoliCnot), Gate::peres(0, 1, 2)); }),
            ErrorCode::LevelViolation);
  EXPECT_NO_THROW(append(new_circuit(3, Level::ToffoliCnot), Gate::toffoli(0, 1, 2)));
}

TEST(register_layout, standard_layout_is_valid) {
  const RegisterLayout layout = RegisterLayout::standard(4);
  EXPECT_NO_THROW(layout.validate());
  EXPECT_EQ(layout.q_bits, qdiv::testing::range_of(0, 4));
  EXPECT_EQ(layout.r_bits, qdiv::testing::range_of(4, 4));
  EXPECT_EQ(layout.d_bits, qdiv::testing::range_of(8, 4));
}

TEST(register_layout, overlapping_registers_rejected) {
  RegisterLayout layout = RegisterLayout::standard(2);
  layout.d_bits[0] = layout.q_bits[1];
  EXPECT_EQ(code_of([&] { layout.validate(); }), ErrorCode::OverlappingRegisters);
  EXPECT_EQ(code_of([] { RegisterLayout::standard(0); }), ErrorCode::BadWidth);
}

TEST(qasm, single_x) {
  Circuit c(1, Level::CliffordT);
  c.append(Gate::x(0));
  EXPECT_EQ(export_qasm(c),
            "OPENQASM 2.0;\n"
            "include \"qelib1.inc\";\n"
            "qreg q[1];\n"
            "x q[0];\n");
}

TEST(qasm, toffoli_line) {
  Circuit c(3, Level::ToffoliCnot);
  c.append(Gate::toffoli(0, 1, 2));
  EXPECT_NE(export_qasm(c).find("\nccx q[0],q[1],q[2];\n"), std::string::npos);
  EXPECT_EQ(qasm_body_lines(export_qasm(c)), 1U);
}

TEST(qasm, every_clifford_t_name) {
  Circuit c(2, Level::CliffordT);
  for (const Gate &g : {Gate::h(0), Gate::t(1), Gate::tdg(0), Gate::s(1),
                        Gate::sdg(0), Gate::cnot(1, 0), Gate::x(1)}) {
    c.append(g);
  }
  EXPECT_EQ(export_qasm(c),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n"
            "h q[0];\nt q[1];\ntdg q[0];\ns q[1];\nsdg q[0];\ncx q[1],q[0];\nx q[1];\n");
}

TEST(qasm, peres_is_unexportable) {
  Circuit c(3, Level::Logical);
  c.append(Gate::peres(0, 1, 2));
  EXPECT_EQ(code_of([&] { export_qasm(c); }), ErrorCode::UnexportableGate);
}

TEST(qasm, body_line_count_matches_gate_count) {
  std::mt19937_64 rng(11);
  for (Level level : {Level::ToffoliCnot, Level::CliffordT}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Circuit c = qdiv::testing::random_circuit(rng, 1 + trial % 9, trial, level);
      const std::string text = export_qasm(c);
      EXPECT_EQ(qasm_body_lines(text), c.size());
      EXPECT_EQ(text, export_qasm(c));
    }
  }
}
