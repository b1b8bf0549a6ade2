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

#include "gidnet/rewrite.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gidnet/dag.hpp"
#include "gidnet/errors.hpp"
#include "gidnet/matrices.hpp"

namespace gidnet {

namespace {

/// Empty string when `solution` partitions [0, n); otherwise the reason.
std::string partition_problem(const ReuseSolution& solution, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const auto& seq : solution.sequences) {
    if (seq.empty()) return "empty reuse sequence";
    for (QubitId q : seq) {
      if (q >= n) return "qubit " + std::to_string(q) + " is not in the circuit";
      if (seen[q]) return "qubit " + std::to_string(q) + " appears twice";
      seen[q] = true;
    }
  }
  for (QubitId q = 0; q < n; ++q)
    if (!seen[q]) return "qubit " + std::to_string(q) + " is missing";
  return {};
}

void add_reuse_edges(CircuitDag& dag, const ReuseSolution& solution) {
  for (const auto& seq : solution.sequences)
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
      dag.add_edge(dag.terminal(seq[k]), dag.root(seq[k + 1]));
}

}  // namespace

DynamicCircuit rewrite_dynamic(const Circuit& c, const ReuseSolution& solution) {
  const std::size_t n = c.num_qubits();
  if (auto problem = partition_problem(solution, n); !problem.empty())
    throw std::invalid_argument("rewrite_dynamic: " + problem);

  CircuitDag dag = build_dag(c);
  add_reuse_edges(dag, solution);

  DynamicCircuit out;
  std::vector<std::size_t> wire_of(n);
  std::vector<bool> has_next(n, false);
  for (std::size_t z = 0; z < solution.sequences.size(); ++z) {
    const auto& seq = solution.sequences[z];
    out.mapping.push_back({z, seq});
    for (std::size_t k = 0; k < seq.size(); ++k) {
      wire_of[seq[k]] = z;
      has_next[seq[k]] = k + 1 < seq.size();
    }
  }
  out.clbit_of.assign(n, std::nullopt);
  for (QubitId q = 0; q < n; ++q)
    if (auto m = dag.terminal_measure(q)) out.clbit_of[q] = c.instructions()[*m].clbit;

  const auto& insts = c.instructions();
  // Ready-queue key: (wire, source position, vertex). Roots sort before
  // everything on their wire; a terminal sorts at its measurement, or after
  // all instructions when the qubit is never measured.
  using Key = std::tuple<std::size_t, std::ptrdiff_t, VertexId>;
  auto key = [&](VertexId v) -> Key {
    switch (dag.kind(v)) {
      case VertexKind::Root:
        return {wire_of[dag.qubit_of(v)], -1, v};
      case VertexKind::Terminal: {
        QubitId q = dag.qubit_of(v);
        auto m = dag.terminal_measure(q);
        auto pos = static_cast<std::ptrdiff_t>(m ? *m : insts.size() + q);
        return {wire_of[q], pos, v};
      }
      case VertexKind::Op: {
        std::size_t wire = n;
        for (QubitId q : insts[dag.instruction_of(v)].qubits) wire = std::min(wire, wire_of[q]);
        return {wire, static_cast<std::ptrdiff_t>(dag.instruction_of(v)), v};
      }
    }
    return {};
  };

  auto deg = dag.in_degrees();
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (VertexId v = 0; v < dag.num_vertices(); ++v)
    if (deg[v] == 0) ready.push(key(v));

  Circuit emitted(solution.width(), c.num_clbits());
  std::size_t visited = 0;
  while (!ready.empty()) {
    const VertexId v = std::get<2>(ready.top());
    ready.pop();
    ++visited;
    switch (dag.kind(v)) {
      case VertexKind::Root: {
        QubitId q = dag.qubit_of(v);
        // Later segments get their reset from the previous terminal.
        if (dag.root_reset(q) && out.mapping[wire_of[q]].segments.front() == q)
          emitted.reset(wire_of[q]);
        break;
      }
      case VertexKind::Terminal: {
        QubitId q = dag.qubit_of(v);
        if (out.clbit_of[q]) emitted.measure(wire_of[q], *out.clbit_of[q]);
        if (has_next[q]) emitted.reset(wire_of[q]);
        break;
      }
      case VertexKind::Op: {
        Instruction inst = insts[dag.instruction_of(v)];
        for (auto& q : inst.qubits) q = wire_of[q];
        emitted.append(std::move(inst));
        break;
      }
    }
    for (const auto& e : dag.out_edges(v))
      if (--deg[e.to] == 0) ready.push(key(e.to));
  }
  if (visited != dag.num_vertices())
    throw ContractError("rewrite_dynamic: reuse edges create a cycle");
  out.circuit = std::move(emitted);
  return out;
}

std::string serialize_dynamic(const DynamicCircuit& d) {
  std::ostringstream os;
  os << serialize_circuit(d.circuit);
  for (const auto& vq : d.mapping) {
    os << "// z" << vq.index << ':';
    for (QubitId q : vq.segments) os << " q" << q;
    os << '\n';
  }
  return os.str();
}

ValidationReport validate_solution(const Circuit& c, const ReuseSolution& solution) {
  auto fail = [](Violation v, std::string msg) { return ValidationReport{false, v, std::move(msg)}; };
  if (auto problem = partition_problem(solution, c.num_qubits()); !problem.empty())
    return fail(Violation::Partition, "partition: " + problem);

  const CandidateMatrix cm = candidate_matrix(c);
  for (const auto& seq : solution.sequences)
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
      if (!cm.at(seq[k], seq[k + 1]))
        return fail(Violation::IllegalEdge, "illegal edge: (t" + std::to_string(seq[k]) +
                                                ", r" + std::to_string(seq[k + 1]) +
                                                ") is not a candidate edge");

  CircuitDag dag = build_dag(c);
  add_reuse_edges(dag, solution);
  if (!dag.is_acyclic()) return fail(Violation::Cycle, "cycle: augmented DAG is cyclic");
  return {};
}

}  // namespace gidnet
