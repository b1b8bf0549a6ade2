// Copyright 2026 The gidnet Authors
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

#include <gtest/gtest.h>

#include <string>

#include "gidnet/benchgen.hpp"
#include "gidnet/circuit.hpp"
#include "gidnet/dag.hpp"
#include "gidnet/errors.hpp"
#include "support/random_circuit.hpp"

namespace gidnet {
namespace {

constexpr const char* kFig1a = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[5];
creg c[5];
cx q[0],q[4];
cx q[2],q[4];
cx q[3],q[4];
barrier q[0],q[1],q[2],q[3],q[4];
measure q[0] -> c[0];
measure q[1] -> c[1];
measure q[2] -> c[2];
measure q[3] -> c[3];
measure q[4] -> c[4];
)";

TEST(ParseCircuit, WorkedExample) {
  const Circuit c = parse_circuit(kFig1a);
  EXPECT_EQ(c.num_qubits(), 5u);
  EXPECT_EQ(c.num_clbits(), 5u);
  ASSERT_EQ(c.instructions().size(), 9u);
  EXPECT_EQ(c.gate_count(), 3u);
  EXPECT_EQ(c.instructions()[3].kind, InstructionKind::Barrier);
  EXPECT_EQ(c.instructions()[0].qubits, (std::vector<QubitId>{0, 4}));
  EXPECT_EQ(c.form(), CircuitForm::Static);
}

TEST(ParseCircuit, MinimalWithoutCreg) {
  const Circuit c = parse_circuit("qreg q[1]; measure q[0] -> c[0];");
  EXPECT_EQ(c.num_qubits(), 1u);
  EXPECT_EQ(c.num_clbits(), 1u);
  ASSERT_EQ(c.instructions().size(), 1u);
  EXPECT_EQ(c.instructions()[0].kind, InstructionKind::Measure);
  EXPECT_EQ(c.instructions()[0].clbit, 0u);
}

TEST(ParseCircuit, ParameterExpressions) {
  const Circuit c = parse_circuit(
      "qreg q[1];\nrz(pi/2) q[0];\nrx(-2*pi + 0.5) q[0];\nrz((1+1)*0.25) q[0];\n");
  ASSERT_EQ(c.instructions().size(), 3u);
  EXPECT_DOUBLE_EQ(c.instructions()[0].params[0], 3.141592653589793 / 2);
  EXPECT_DOUBLE_EQ(c.instructions()[1].params[0], -2 * 3.141592653589793 + 0.5);
  EXPECT_DOUBLE_EQ(c.instructions()[2].params[0], 0.5);
}

TEST(ParseCircuit, WhitespaceAndComments) {
  const Circuit c = parse_circuit(
      "qreg   q [ 2 ] ;  // two qubits\n creg c[2];cx q[0] , q[1];\n"
      "// comment line\nbarrier;  measure q[1]->c[0];");
  EXPECT_EQ(c.instructions().size(), 3u);
  EXPECT_TRUE(c.instructions()[1].qubits.empty());
}

TEST(ParseCircuit, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("qreg q[2];\nfoo q[0];\n"), 2u);               // unknown gate
  EXPECT_EQ(line_of("qreg q[2];\n\nh q[2];\n"), 3u);               // out of range
  EXPECT_EQ(line_of("qreg q[2];\ncx q[0];\n"), 2u);                // arity
  EXPECT_EQ(line_of("qreg q[2];\ncx q[1],q[1];\n"), 2u);           // repeated operand
  EXPECT_EQ(line_of("qreg q[2];\nrz q[0];\n"), 2u);                // missing parameter
  EXPECT_EQ(line_of("qreg q[2];\nh q[0]\n"), 2u);                  // missing ';'
  EXPECT_EQ(line_of("qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[3];\n"), 3u);
  EXPECT_EQ(line_of("qreg q[1];\nmeasure q[0] -> c[0];\nmeasure q[0] -> c[0];"), 3u);
  EXPECT_EQ(line_of("h q[0];\n"), 1u);                             // no qreg
  EXPECT_THROW(parse_circuit("qreg q[1]; qreg r[1];"), ParseError);
}

TEST(ParseCircuit, FormInference) {
  EXPECT_EQ(parse_circuit("qreg q[1]; reset q[0]; h q[0];").form(), CircuitForm::Static);
  EXPECT_EQ(parse_circuit("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0]; reset q[0];").form(),
            CircuitForm::Dynamic);
}

TEST(SerializeCircuit, EmptyCircuitIsHeaderOnly) {
  const std::string text = serialize_circuit(Circuit(0, 0));
  EXPECT_EQ(text.find("measure"), std::string::npos);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;", 0), 0u);
  EXPECT_EQ(parse_circuit(text), Circuit(0, 0));
}

TEST(SerializeCircuit, RoundTripRandomCircuits) {
  Rng rng(11);
  testing::RandomCircuitOptions opt;
  opt.mid_measure_chance = 0.2;
  opt.leading_reset_chance = 0.2;
  opt.unmeasured_chance = 0.1;
  opt.barriers = true;
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    const std::string text = serialize_circuit(c);
    const Circuit back = parse_circuit(text);
    ASSERT_EQ(back, c) << text;
    ASSERT_EQ(serialize_circuit(back), text);
  }
}

TEST(SerializeCircuit, RoundTripBenchmarkCircuits) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Circuit g = gen_grcs({3, 4, 11, seed});
    EXPECT_EQ(parse_circuit(serialize_circuit(g)), g);
    const Circuit q = gen_qaoa(QaoaSpec::with_default_angles(gen_u3r(10, seed), 2));
    EXPECT_EQ(parse_circuit(serialize_circuit(q)), q);
  }
}

TEST(CircuitAppend, RejectsInvalidInstructions) {
  Circuit c(2, 1);
  EXPECT_THROW(c.h(2), std::invalid_argument);
  EXPECT_THROW(c.cx(1, 1), std::invalid_argument);
  EXPECT_THROW(c.gate(Gate::RZ, {0}), std::invalid_argument);
  EXPECT_THROW(c.gate(Gate::H, {0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(c.measure(0, 1), std::invalid_argument);
  c.measure(0, 0);
  EXPECT_THROW(c.measure(1, 0), std::invalid_argument);
}

// DAG

TEST(BuildDag, WorkedExample) {
  const CircuitDag dag = build_dag(testing::worked_example());
  EXPECT_EQ(dag.num_qubits(), 5u);
  EXPECT_EQ(dag.num_ops(), 3u);
  EXPECT_EQ(dag.num_vertices(), 13u);
  EXPECT_TRUE(dag.is_acyclic());
  // r0 -> cx0 -> cx1 -> cx2 -> t4 along wire 4.
  auto has_edge = [&](VertexId a, VertexId b) {
    for (const auto& e : dag.out_edges(a))
      if (e.to == b) return true;
    return false;
  };
  EXPECT_TRUE(has_edge(dag.root(0), dag.op(0)));
  EXPECT_TRUE(has_edge(dag.op(0), dag.op(1)));
  EXPECT_TRUE(has_edge(dag.op(1), dag.op(2)));
  EXPECT_TRUE(has_edge(dag.op(2), dag.terminal(4)));
  EXPECT_TRUE(has_edge(dag.root(1), dag.terminal(1)));
  for (QubitId q = 0; q < 5; ++q) EXPECT_EQ(dag.terminal_measure(q), q + 4);
}

TEST(BuildDag, GateFreeCircuitHasOnlyWireEdges) {
  Circuit c(2, 2);
  c.measure_all();
  const CircuitDag dag = build_dag(c);
  EXPECT_EQ(dag.num_edges(), 2u);
  ASSERT_EQ(dag.out_edges(0).size(), 1u);
  EXPECT_EQ(dag.out_edges(0)[0].to, dag.terminal(0));
  EXPECT_EQ(dag.out_edges(1)[0].to, dag.terminal(1));
}

TEST(BuildDag, RejectsDynamicCircuits) {
  Circuit c(1, 1);
  c.h(0).measure(0, 0).reset(0);
  EXPECT_THROW(build_dag(c), std::invalid_argument);
}

// Independent oracle: walk each qubit's instructions and record the chain of
// vertices it passes through; compare against the DAG's wire-labelled edges.
TEST(BuildDag, MatchesPerQubitChainOracle) {
  Rng rng(5);
  testing::RandomCircuitOptions opt;
  opt.mid_measure_chance = 0.3;
  opt.leading_reset_chance = 0.3;
  opt.unmeasured_chance = 0.2;
  opt.barriers = true;
  for (int iter = 0; iter < 300; ++iter) {
    const Circuit c = testing::random_circuit(rng, opt);
    const CircuitDag dag = build_dag(c);
    const std::size_t n = c.num_qubits();
    ASSERT_TRUE(dag.is_acyclic());

    // Expected op vertices per qubit, in order.
    std::vector<std::vector<std::size_t>> touches(n);
    std::vector<std::size_t> last_index(n, SIZE_MAX);
    const auto& insts = c.instructions();
    for (std::size_t k = 0; k < insts.size(); ++k)
      if (insts[k].kind != InstructionKind::Barrier)
        for (QubitId q : insts[k].qubits) last_index[q] = k;
    for (std::size_t k = 0; k < insts.size(); ++k) {
      const auto& in = insts[k];
      if (in.kind == InstructionKind::Barrier) continue;
      if (in.kind == InstructionKind::Reset) continue;  // only leading resets exist here
      if (in.kind == InstructionKind::Measure && last_index[in.qubits[0]] == k) continue;
      for (QubitId q : in.qubits) touches[q].push_back(k);
    }

    std::vector<std::size_t> vertex_of_instruction(insts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < dag.num_ops(); ++i)
      vertex_of_instruction[dag.instruction_of(dag.op(i))] = dag.op(i);

    std::size_t expected_edges = 0;
    for (QubitId q = 0; q < n; ++q) {
      VertexId at = dag.root(q);
      for (std::size_t k : touches[q]) {
        const VertexId next = vertex_of_instruction[k];
        ASSERT_NE(next, SIZE_MAX);
        bool found = false;
        for (const auto& e : dag.out_edges(at)) found |= (e.to == next && e.qubit == q);
        ASSERT_TRUE(found) << "qubit " << q << " instruction " << k;
        at = next;
        ++expected_edges;
      }
      bool found = false;
      for (const auto& e : dag.out_edges(at)) found |= (e.to == dag.terminal(q) && e.qubit == q);
      ASSERT_TRUE(found);
      ++expected_edges;
    }
    EXPECT_EQ(dag.num_edges(), expected_edges);

    // Roots have in-degree 0, terminals out-degree 0.
    const auto indeg = dag.in_degrees();
    for (QubitId q = 0; q < n; ++q) {
      EXPECT_EQ(indeg[dag.root(q)], 0u);
      EXPECT_TRUE(dag.out_edges(dag.terminal(q)).empty());
    }

    // Topological order respects instruction order among ops sharing a qubit.
    const auto order = dag.topological_order();
    ASSERT_TRUE(order.has_value());
    std::vector<std::size_t> pos(dag.num_vertices());
    for (std::size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
    for (QubitId q = 0; q < n; ++q)
      for (std::size_t i = 1; i < touches[q].size(); ++i)
        EXPECT_LT(pos[vertex_of_instruction[touches[q][i - 1]]],
                  pos[vertex_of_instruction[touches[q][i]]]);
  }
}

}  // namespace
}  // namespace gidnet
