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
#include <string_view>
#include <vector>

namespace gidnet {

/// Index of a logical qubit, in [0, num_qubits).
using QubitId = std::size_t;

enum class InstructionKind { Gate, Measure, Reset, Barrier };

/// Supported gate set. sx and sy are the square roots of X and Y.
enum class Gate { H, X, Y, Z, S, T, SX, SY, RX, RZ, CX, CZ };

std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);
/// Number of qubit operands (1 or 2).
std::size_t gate_arity(Gate g);
/// Number of real angle parameters (0 or 1).
std::size_t gate_param_count(Gate g);

struct Instruction {
  InstructionKind kind = InstructionKind::Gate;
  Gate gate = Gate::H;  // meaningful only for kind == Gate
  std::vector<double> params;
  std::vector<QubitId> qubits;  // empty barrier means "all qubits"
  std::optional<std::size_t> clbit;

  static Instruction make_gate(Gate g, std::vector<QubitId> qubits,
                               std::vector<double> params = {});
  static Instruction make_measure(QubitId q, std::size_t clbit);
  static Instruction make_reset(QubitId q);
  static Instruction make_barrier(std::vector<QubitId> qubits = {});

  bool is_gate() const { return kind == InstructionKind::Gate; }
  bool operator==(const Instruction&) const = default;
};

/// Static circuits never reset a qubit after it has been operated on;
/// dynamic circuits do.
enum class CircuitForm { Static, Dynamic };

class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t num_qubits, std::size_t num_clbits)
      : num_qubits_(num_qubits), num_clbits_(num_clbits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_clbits() const { return num_clbits_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  CircuitForm form() const { return form_; }

  /// Appends after checking operand ranges, gate arity, parameter count and
  /// single assignment of classical bits. Throws std::invalid_argument.
  Circuit& append(Instruction inst);

  Circuit& gate(Gate g, std::vector<QubitId> qubits, std::vector<double> params = {}) {
    return append(Instruction::make_gate(g, std::move(qubits), std::move(params)));
  }
  Circuit& h(QubitId q) { return gate(Gate::H, {q}); }
  Circuit& x(QubitId q) { return gate(Gate::X, {q}); }
  Circuit& cx(QubitId c, QubitId t) { return gate(Gate::CX, {c, t}); }
  Circuit& cz(QubitId a, QubitId b) { return gate(Gate::CZ, {a, b}); }
  Circuit& rx(double theta, QubitId q) { return gate(Gate::RX, {q}, {theta}); }
  Circuit& rz(double theta, QubitId q) { return gate(Gate::RZ, {q}, {theta}); }
  Circuit& measure(QubitId q, std::size_t clbit) {
    return append(Instruction::make_measure(q, clbit));
  }
  Circuit& reset(QubitId q) { return append(Instruction::make_reset(q)); }
  Circuit& barrier(std::vector<QubitId> qubits = {}) {
    return append(Instruction::make_barrier(std::move(qubits)));
  }
  /// measure q[i] -> c[i] for every qubit; requires num_clbits >= num_qubits.
  Circuit& measure_all();

  std::size_t gate_count() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qubits_ = 0;
  std::size_t num_clbits_ = 0;
  std::vector<Instruction> instructions_;
  std::vector<bool> clbit_written_;
  std::vector<bool> qubit_touched_;
  CircuitForm form_ = CircuitForm::Static;
};

/// Parses the QASM subset: `OPENQASM 2.0;` (optional), `include "...";`
/// (ignored), one `qreg`, at most one `creg`, gates, `measure q[i] -> c[k];`,
/// `reset q[i];`, `barrier ...;`. `//` comments. Throws ParseError.
Circuit parse_circuit(std::string_view text);

/// Emits text that parse_circuit maps back to an identical Circuit.
std::string serialize_circuit(const Circuit& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gidnet
