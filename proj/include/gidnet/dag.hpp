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

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "gidnet/circuit.hpp"

namespace gidnet {

enum class VertexKind { Root, Terminal, Op };

using VertexId = std::size_t;

/// Edge label for edges that do not follow a qubit wire (reuse edges).
inline constexpr QubitId kNoQubit = std::numeric_limits<QubitId>::max();

struct DagEdge {
  VertexId to;
  QubitId qubit;  // wire the edge follows, or kNoQubit
};

/// Dependency DAG of a static circuit. Vertex ids are laid out as
/// [roots 0..n) [terminals n..2n) [ops 2n..), ops in instruction order.
/// Barriers add nothing. A measurement that is the last operation on its
/// qubit is folded into that qubit's terminal; leading resets are folded
/// into the root.
class CircuitDag {
 public:
  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_vertices() const { return out_.size(); }
  std::size_t num_ops() const { return op_instruction_.size(); }
  std::size_t num_edges() const;

  VertexId root(QubitId q) const { return q; }
  VertexId terminal(QubitId q) const { return num_qubits_ + q; }
  VertexId op(std::size_t k) const { return 2 * num_qubits_ + k; }

  VertexKind kind(VertexId v) const {
    if (v < num_qubits_) return VertexKind::Root;
    if (v < 2 * num_qubits_) return VertexKind::Terminal;
    return VertexKind::Op;
  }
  /// Qubit of a root or terminal vertex.
  QubitId qubit_of(VertexId v) const { return v < num_qubits_ ? v : v - num_qubits_; }
  /// Source instruction index of an op vertex.
  std::size_t instruction_of(VertexId v) const { return op_instruction_[v - 2 * num_qubits_]; }

  /// Index of the final measurement folded into the terminal, if any.
  std::optional<std::size_t> terminal_measure(QubitId q) const { return terminal_measure_[q]; }
  /// True when the qubit's first operation was an explicit reset.
  bool root_reset(QubitId q) const { return root_reset_[q]; }

  const std::vector<DagEdge>& out_edges(VertexId v) const { return out_[v]; }
  std::vector<std::size_t> in_degrees() const;

  void add_edge(VertexId from, VertexId to, QubitId qubit = kNoQubit) {
    out_[from].push_back({to, qubit});
  }

  /// Kahn topological order (smallest ready id first); nullopt on a cycle.
  std::optional<std::vector<VertexId>> topological_order() const;
  bool is_acyclic() const { return topological_order().has_value(); }

 private:
  friend CircuitDag build_dag(const Circuit& c);

  std::size_t num_qubits_ = 0;
  std::vector<std::vector<DagEdge>> out_;
  std::vector<std::size_t> op_instruction_;
  std::vector<std::optional<std::size_t>> terminal_measure_;
  std::vector<bool> root_reset_;
};

/// Builds the dependency DAG. Each gate (and each non-final measurement)
/// becomes one op vertex with one incoming edge per operand from that
/// qubit's previous vertex. Throws std::invalid_argument for dynamic
/// circuits.
CircuitDag build_dag(const Circuit& c);

}  // namespace gidnet
