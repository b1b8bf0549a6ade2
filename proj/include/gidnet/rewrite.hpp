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
#include <optional>
#include <string>
#include <vector>

#include "gidnet/circuit.hpp"
#include "gidnet/reuse.hpp"

namespace gidnet {

/// A wire of the dynamic circuit and the logical qubits it hosts, in order.
struct VirtualQubit {
  std::size_t index = 0;
  std::vector<QubitId> segments;
  bool operator==(const VirtualQubit&) const = default;
};

struct DynamicCircuit {
  Circuit circuit;
  std::vector<VirtualQubit> mapping;
  /// Classical bit recording each logical qubit's final measurement.
  std::vector<std::optional<std::size_t>> clbit_of;

  std::size_t width() const { return mapping.size(); }
};

/// Rewrites `c` onto solution.width() wires: the solution's reuse edges are
/// added to the DAG, which is then emitted in Kahn order with ready vertices
/// keyed by (virtual qubit, source instruction index). Each logical qubit's
/// terminal becomes its measurement (original classical bit) followed by a
/// reset when another segment follows on the same wire. Barriers are
/// dropped. Throws std::invalid_argument for an out-of-range or non-partition
/// solution and ContractError when the augmented DAG has a cycle.
DynamicCircuit rewrite_dynamic(const Circuit& c, const ReuseSolution& solution);

/// Circuit text followed by `// z<i>: q<a> q<b> ...` mapping lines.
std::string serialize_dynamic(const DynamicCircuit& d);

enum class Violation { None, Partition, IllegalEdge, Cycle };

struct ValidationReport {
  bool ok = true;
  Violation violation = Violation::None;
  std::string message;
};

/// Checks the partition, candidate-matrix legality of every consecutive
/// pair, and acyclicity of the augmented DAG, in that order; reports the
/// first violation found.
ValidationReport validate_solution(const Circuit& c, const ReuseSolution& solution);

}  // namespace gidnet
