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

#include "gidnet/dag.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace gidnet {

std::size_t CircuitDag::num_edges() const {
  std::size_t total = 0;
  for (const auto& edges : out_) total += edges.size();
  return total;
}

std::vector<std::size_t> CircuitDag::in_degrees() const {
  std::vector<std::size_t> deg(out_.size(), 0);
  for (const auto& edges : out_)
    for (const auto& e : edges) ++deg[e.to];
  return deg;
}

std::optional<std::vector<VertexId>> CircuitDag::topological_order() const {
  auto deg = in_degrees();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < deg.size(); ++v)
    if (deg[v] == 0) ready.push(v);
  std::vector<VertexId> order;
  order.reserve(deg.size());
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& e : out_[v])
      if (--deg[e.to] == 0) ready.push(e.to);
  }
  if (order.size() != deg.size()) return std::nullopt;
  return order;
}

CircuitDag build_dag(const Circuit& c) {
  if (c.form() != CircuitForm::Static)
    throw std::invalid_argument("build_dag requires a static circuit");
  const std::size_t n = c.num_qubits();
  const auto& insts = c.instructions();

  // A measurement is folded into the terminal when nothing else touches
  // its qubit afterwards.
  std::vector<std::optional<std::size_t>> last_touch(n);
  for (std::size_t i = 0; i < insts.size(); ++i)
    if (insts[i].kind != InstructionKind::Barrier)
      for (QubitId q : insts[i].qubits) last_touch[q] = i;

  CircuitDag dag;
  dag.num_qubits_ = n;
  dag.out_.resize(2 * n);
  dag.terminal_measure_.assign(n, std::nullopt);
  dag.root_reset_.assign(n, false);

  std::vector<VertexId> frontier(n);
  for (QubitId q = 0; q < n; ++q) frontier[q] = dag.root(q);

  for (std::size_t i = 0; i < insts.size(); ++i) {
    const auto& inst = insts[i];
    switch (inst.kind) {
      case InstructionKind::Barrier:
        continue;
      case InstructionKind::Reset:
        // Static form guarantees this precedes every other operation.
        dag.root_reset_[inst.qubits[0]] = true;
        continue;
      case InstructionKind::Measure:
        if (last_touch[inst.qubits[0]] == i) {
          dag.terminal_measure_[inst.qubits[0]] = i;
          continue;
        }
        break;
      case InstructionKind::Gate:
        break;
    }
    VertexId v = dag.out_.size();
    dag.out_.emplace_back();
    dag.op_instruction_.push_back(i);
    for (QubitId q : inst.qubits) {
      dag.add_edge(frontier[q], v, q);
      frontier[q] = v;
    }
  }
  for (QubitId q = 0; q < n; ++q) dag.add_edge(frontier[q], dag.terminal(q), q);
  return dag;
}

}  // namespace gidnet
