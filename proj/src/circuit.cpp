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

#include "gidnet/circuit.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gidnet/errors.hpp"

namespace gidnet {

namespace {

struct GateInfo {
  Gate gate;
  std::string_view name;
  std::size_t arity;
  std::size_t params;
};

constexpr std::array<GateInfo, 12> kGates{{
    {Gate::H, "h", 1, 0},
    {Gate::X, "x", 1, 0},
    {Gate::Y, "y", 1, 0},
    {Gate::Z, "z", 1, 0},
    {Gate::S, "s", 1, 0},
    {Gate::T, "t", 1, 0},
    {Gate::SX, "sx", 1, 0},
    {Gate::SY, "sy", 1, 0},
    {Gate::RX, "rx", 1, 1},
    {Gate::RZ, "rz", 1, 1},
    {Gate::CX, "cx", 2, 0},
    {Gate::CZ, "cz", 2, 0},
}};

const GateInfo& info(Gate g) { return kGates[static_cast<std::size_t>(g)]; }

}  // namespace

std::string_view gate_name(Gate g) { return info(g).name; }
std::size_t gate_arity(Gate g) { return info(g).arity; }
std::size_t gate_param_count(Gate g) { return info(g).params; }

std::optional<Gate> gate_from_name(std::string_view name) {
  for (const auto& gi : kGates)
    if (gi.name == name) return gi.gate;
  return std::nullopt;
}

Instruction Instruction::make_gate(Gate g, std::vector<QubitId> qubits,
                                   std::vector<double> params) {
  Instruction inst;
  inst.kind = InstructionKind::Gate;
  inst.gate = g;
  inst.qubits = std::move(qubits);
  inst.params = std::move(params);
  return inst;
}

Instruction Instruction::make_measure(QubitId q, std::size_t clbit) {
  Instruction inst;
  inst.kind = InstructionKind::Measure;
  inst.qubits = {q};
  inst.clbit = clbit;
  return inst;
}

Instruction Instruction::make_reset(QubitId q) {
  Instruction inst;
  inst.kind = InstructionKind::Reset;
  inst.qubits = {q};
  return inst;
}

Instruction Instruction::make_barrier(std::vector<QubitId> qubits) {
  Instruction inst;
  inst.kind = InstructionKind::Barrier;
  inst.qubits = std::move(qubits);
  return inst;
}

Circuit& Circuit::append(Instruction inst) {
  for (QubitId q : inst.qubits)
    if (q >= num_qubits_)
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range (" + std::to_string(num_qubits_) +
                                  " qubits)");
  switch (inst.kind) {
    case InstructionKind::Gate: {
      const auto& gi = info(inst.gate);
      if (inst.qubits.size() != gi.arity)
        throw std::invalid_argument(std::string(gi.name) + " takes " +
                                    std::to_string(gi.arity) + " qubit(s)");
      if (inst.params.size() != gi.params)
        throw std::invalid_argument(std::string(gi.name) + " takes " +
                                    std::to_string(gi.params) + " parameter(s)");
      if (gi.arity == 2 && inst.qubits[0] == inst.qubits[1])
        throw std::invalid_argument(std::string(gi.name) + " operands must be distinct");
      if (inst.clbit) throw std::invalid_argument("gates do not write classical bits");
      break;
    }
    case InstructionKind::Measure:
      if (inst.qubits.size() != 1 || !inst.clbit)
        throw std::invalid_argument("measure takes one qubit and one classical bit");
      if (*inst.clbit >= num_clbits_)
        throw std::invalid_argument("classical bit " + std::to_string(*inst.clbit) +
                                    " out of range");
      if (!inst.params.empty()) throw std::invalid_argument("measure takes no parameters");
      break;
    case InstructionKind::Reset:
      if (inst.qubits.size() != 1 || inst.clbit || !inst.params.empty())
        throw std::invalid_argument("reset takes exactly one qubit");
      break;
    case InstructionKind::Barrier:
      if (inst.clbit || !inst.params.empty())
        throw std::invalid_argument("barrier takes only qubits");
      break;
  }

  if (clbit_written_.size() != num_clbits_) clbit_written_.assign(num_clbits_, false);
  if (qubit_touched_.size() != num_qubits_) qubit_touched_.assign(num_qubits_, false);

  if (inst.kind == InstructionKind::Measure) {
    if (clbit_written_[*inst.clbit])
      throw std::invalid_argument("classical bit " + std::to_string(*inst.clbit) +
                                  " written twice");
    clbit_written_[*inst.clbit] = true;
  }
  if (inst.kind == InstructionKind::Reset) {
    if (qubit_touched_[inst.qubits[0]]) form_ = CircuitForm::Dynamic;
  } else if (inst.kind != InstructionKind::Barrier) {
    for (QubitId q : inst.qubits) qubit_touched_[q] = true;
  }
  instructions_.push_back(std::move(inst));
  return *this;
}

Circuit& Circuit::measure_all() {
  for (QubitId q = 0; q < num_qubits_; ++q) measure(q, q);
  return *this;
}

std::size_t Circuit::gate_count() const {
  std::size_t count = 0;
  for (const auto& inst : instructions_) count += inst.is_gate() ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Statement {
  std::string text;
  std::size_t line;
};

/// Splits source into `;`-terminated statements with comments removed.
std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  std::size_t current_line = 0;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i == text.size()) break;
      ch = '\n';
    }
    if (ch == '\n') {
      ++line;
      current.push_back(' ');
      continue;
    }
    if (ch == ';') {
      out.push_back({current, current_line == 0 ? line : current_line});
      current.clear();
      current_line = 0;
      continue;
    }
    if (current_line == 0 && !std::isspace(static_cast<unsigned char>(ch)))
      current_line = line;
    current.push_back(ch);
  }
  bool trailing = false;
  for (char ch : current)
    if (!std::isspace(static_cast<unsigned char>(ch))) trailing = true;
  if (trailing) throw ParseError(current_line, "missing ';' at end of statement");
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start])))
      fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::size_t integer() {
    skip_ws();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc()) fail("expected non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  double number() {
    skip_ws();
    double value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc()) fail("expected number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double value = term();
    while (true) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }
  std::size_t line() const { return line_; }

 private:
  double term() {
    double value = factor();
    while (true) {
      if (accept('*'))
        value *= factor();
      else if (accept('/'))
        value /= factor();
      else
        return value;
    }
  }
  double factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      double v = expression();
      expect(')');
      return v;
    }
    if (accept("pi")) return std::numbers::pi;
    return number();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct PendingInstruction {
  Instruction inst;
  std::size_t line;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<std::string> qreg_name;
  std::optional<std::string> creg_name;
  std::size_t num_qubits = 0;
  std::optional<std::size_t> num_clbits;
  std::size_t max_clbit_plus_one = 0;
  std::vector<PendingInstruction> pending;

  auto operand = [&](Cursor& cur, const std::optional<std::string>& reg,
                     std::string_view what) -> std::size_t {
    std::string name = cur.identifier();
    if (!reg) cur.fail(std::string(what) + " register used before declaration");
    if (name != *reg) cur.fail("unknown register '" + name + "'");
    cur.expect('[');
    std::size_t index = cur.integer();
    cur.expect(']');
    return index;
  };

  for (const auto& st : split_statements(text)) {
    Cursor cur(st.text, st.line);
    if (cur.at_end()) continue;
    std::string head = cur.identifier();
    if (head == "OPENQASM") {
      cur.number();
    } else if (head == "include") {
      cur.skip_ws();
      if (!cur.accept('"')) cur.fail("expected quoted file name");
      while (!cur.at_end() && cur.peek() != '"') cur.accept(cur.peek());
      if (!cur.accept('"')) cur.fail("unterminated string");
    } else if (head == "qreg" || head == "creg") {
      std::string name = cur.identifier();
      cur.expect('[');
      std::size_t size = cur.integer();
      cur.expect(']');
      if (head == "qreg") {
        if (qreg_name) cur.fail("only one quantum register is supported");
        qreg_name = name;
        num_qubits = size;
      } else {
        if (creg_name) cur.fail("only one classical register is supported");
        creg_name = name;
        num_clbits = size;
      }
    } else if (head == "measure") {
      std::size_t q = operand(cur, qreg_name, "quantum");
      if (!cur.accept("->")) cur.fail("expected '->'");
      std::string name = cur.identifier();
      if (creg_name && name != *creg_name) cur.fail("unknown register '" + name + "'");
      if (!creg_name) creg_name = name;
      cur.expect('[');
      std::size_t k = cur.integer();
      cur.expect(']');
      max_clbit_plus_one = std::max(max_clbit_plus_one, k + 1);
      pending.push_back({Instruction::make_measure(q, k), st.line});
    } else if (head == "reset") {
      pending.push_back({Instruction::make_reset(operand(cur, qreg_name, "quantum")), st.line});
    } else if (head == "barrier") {
      std::vector<QubitId> qubits;
      if (!cur.at_end()) {
        std::string name = cur.identifier();
        if (!qreg_name || name != *qreg_name) cur.fail("unknown register '" + name + "'");
        if (cur.accept('[')) {
          qubits.push_back(cur.integer());
          cur.expect(']');
          while (cur.accept(',')) qubits.push_back(operand(cur, qreg_name, "quantum"));
        }
      }
      pending.push_back({Instruction::make_barrier(std::move(qubits)), st.line});
    } else {
      auto g = gate_from_name(head);
      if (!g) cur.fail("unknown gate '" + head + "'");
      std::vector<double> params;
      if (cur.accept('(')) {
        if (!cur.accept(')')) {
          params.push_back(cur.expression());
          while (cur.accept(',')) params.push_back(cur.expression());
          cur.expect(')');
        }
      }
      std::vector<QubitId> qubits{operand(cur, qreg_name, "quantum")};
      while (cur.accept(',')) qubits.push_back(operand(cur, qreg_name, "quantum"));
      pending.push_back({Instruction::make_gate(*g, std::move(qubits), std::move(params)),
                         st.line});
    }
    if (!cur.at_end()) cur.fail("unexpected trailing text");
  }

  if (!qreg_name && !pending.empty()) throw ParseError(0, "missing qreg declaration");
  Circuit circuit(num_qubits, num_clbits.value_or(max_clbit_plus_one));
  for (auto& p : pending) {
    try {
      circuit.append(std::move(p.inst));
    } catch (const std::invalid_argument& e) {
      throw ParseError(p.line, e.what());
    }
  }
  return circuit;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void write_double(std::ostream& os, double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  os.write(buf.data(), ptr - buf.data());
}

}  // namespace

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  os << "creg c[" << c.num_clbits() << "];\n";
  for (const auto& inst : c.instructions()) {
    switch (inst.kind) {
      case InstructionKind::Gate:
        os << gate_name(inst.gate);
        if (!inst.params.empty()) {
          os << '(';
          for (std::size_t i = 0; i < inst.params.size(); ++i) {
            if (i) os << ',';
            write_double(os, inst.params[i]);
          }
          os << ')';
        }
        for (std::size_t i = 0; i < inst.qubits.size(); ++i)
          os << (i ? "," : " ") << "q[" << inst.qubits[i] << ']';
        break;
      case InstructionKind::Measure:
        os << "measure q[" << inst.qubits[0] << "] -> c[" << *inst.clbit << ']';
        break;
      case InstructionKind::Reset:
        os << "reset q[" << inst.qubits[0] << ']';
        break;
      case InstructionKind::Barrier:
        if (inst.qubits.empty()) {
          os << "barrier q";
        } else {
          for (std::size_t i = 0; i < inst.qubits.size(); ++i)
            os << (i ? "," : "barrier ") << "q[" << inst.qubits[i] << ']';
        }
        break;
    }
    os << ";\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace gidnet
