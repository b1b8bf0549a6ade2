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

#include "gidnet/verify.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "gidnet/dag.hpp"
#include "gidnet/errors.hpp"

namespace gidnet {

namespace {

constexpr Amplitude kI{0.0, 1.0};
// Branches lighter than this are dropped; 2^20 of them stay below 1e-12.
constexpr double kNegligibleMass = 1e-18;

}  // namespace

double unitarity_defect(const Matrix2& u) {
  double worst = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amplitude s = std::conj(u[0 * 2 + r]) * u[0 * 2 + c] + std::conj(u[1 * 2 + r]) * u[1 * 2 + c];
      worst = std::max(worst, std::abs(s - Amplitude(r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Matrix2 gate_matrix(Gate g, std::span<const double> params) {
  using std::numbers::sqrt2;
  const double theta = params.empty() ? 0.0 : params[0];
  Matrix2 u;
  switch (g) {
    case Gate::H:
      u = {1 / sqrt2, 1 / sqrt2, 1 / sqrt2, -1 / sqrt2};
      break;
    case Gate::X:
      u = {0, 1, 1, 0};
      break;
    case Gate::Y:
      u = {0, -kI, kI, 0};
      break;
    case Gate::Z:
      u = {1, 0, 0, -1};
      break;
    case Gate::S:
      u = {1, 0, 0, kI};
      break;
    case Gate::T:
      u = {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
      break;
    case Gate::SX:
      u = {Amplitude(0.5, 0.5), Amplitude(0.5, -0.5), Amplitude(0.5, -0.5), Amplitude(0.5, 0.5)};
      break;
    case Gate::SY:
      u = {Amplitude(0.5, 0.5), Amplitude(-0.5, -0.5), Amplitude(0.5, 0.5), Amplitude(0.5, 0.5)};
      break;
    case Gate::RX:
      u = {std::cos(theta / 2), -kI * std::sin(theta / 2), -kI * std::sin(theta / 2),
           std::cos(theta / 2)};
      break;
    case Gate::RZ:
      u = {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
      break;
    case Gate::CX:
    case Gate::CZ:
      throw ContractError("gate_matrix: " + std::string(gate_name(g)) + " is not single-qubit");
  }
  if (unitarity_defect(u) > 1e-12)
    throw ContractError("gate_matrix: " + std::string(gate_name(g)) + " is not unitary");
  return u;
}

double OutcomeDistribution::total() const {
  double sum = 0;
  for (const auto& [key, p] : probabilities) sum += p;
  return sum;
}

namespace {

using State = std::vector<Amplitude>;

void apply_single(State& psi, std::size_t q, const Matrix2& u) {
  const std::size_t mask = std::size_t{1} << q;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a = psi[i];
    const Amplitude b = psi[i | mask];
    psi[i] = u[0] * a + u[1] * b;
    psi[i | mask] = u[2] * a + u[3] * b;
  }
}

void apply_cx(State& psi, std::size_t control, std::size_t target) {
  const std::size_t cm = std::size_t{1} << control;
  const std::size_t tm = std::size_t{1} << target;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if ((i & cm) && !(i & tm)) std::swap(psi[i], psi[i | tm]);
}

void apply_cz(State& psi, std::size_t a, std::size_t b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < psi.size(); ++i)
    if ((i & mask) == mask) psi[i] = -psi[i];
}

/// Zeroes amplitudes whose bit q differs from `outcome`; returns the kept mass.
double project(State& psi, std::size_t q, bool outcome) {
  const std::size_t mask = std::size_t{1} << q;
  double mass = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (static_cast<bool>(i & mask) != outcome)
      psi[i] = 0;
    else
      mass += std::norm(psi[i]);
  }
  return mass;
}

/// Depth-first walk of the measurement tree. States stay unnormalized, so a
/// branch's probability is its squared norm.
class Brancher {
 public:
  Brancher(const Circuit& c, OutcomeDistribution& out) : c_(c), out_(out) {}

  void run(std::size_t pc, State psi, std::uint64_t bits) {
    const auto& insts = c_.instructions();
    for (; pc < insts.size(); ++pc) {
      const auto& inst = insts[pc];
      switch (inst.kind) {
        case InstructionKind::Barrier:
          break;
        case InstructionKind::Gate:
          if (inst.gate == Gate::CX)
            apply_cx(psi, inst.qubits[0], inst.qubits[1]);
          else if (inst.gate == Gate::CZ)
            apply_cz(psi, inst.qubits[0], inst.qubits[1]);
          else
            apply_single(psi, inst.qubits[0], gate_matrix(inst.gate, inst.params));
          break;
        case InstructionKind::Measure:
        case InstructionKind::Reset: {
          const std::size_t q = inst.qubits[0];
          State one = psi;
          const double m1 = project(one, q, true);
          const double m0 = project(psi, q, false);
          const bool is_measure = inst.kind == InstructionKind::Measure;
          std::uint64_t bits1 = bits;
          if (is_measure) {
            const std::uint64_t cm = std::uint64_t{1} << *inst.clbit;
            bits &= ~cm;
            bits1 |= cm;
          } else {
            apply_single(one, q, gate_matrix(Gate::X, {}));
          }
          if (m1 > kNegligibleMass) run(pc + 1, std::move(one), bits1);
          if (m0 <= kNegligibleMass) return;
          break;
        }
      }
    }
    double mass = 0;
    for (const auto& a : psi) mass += std::norm(a);
    if (mass <= kNegligibleMass) return;
    std::string key(c_.num_clbits(), '0');
    for (std::size_t k = 0; k < key.size(); ++k)
      if ((bits >> k) & 1U) key[k] = '1';
    out_.probabilities[key] += mass;
    ++out_.branches;
  }

 private:
  const Circuit& c_;
  OutcomeDistribution& out_;
};

}  // namespace

OutcomeDistribution simulate_distribution(const Circuit& c) {
  if (c.num_qubits() > kMaxSimWires)
    throw SizeLimitError("simulate_distribution: " + std::to_string(c.num_qubits()) +
                         " wires exceeds the limit of " + std::to_string(kMaxSimWires));
  std::size_t measured = 0;
  for (const auto& inst : c.instructions()) measured += inst.kind == InstructionKind::Measure;
  if (measured > kMaxSimClbits || c.num_clbits() > 64)
    throw SizeLimitError("simulate_distribution: too many classical bits");

  OutcomeDistribution dist;
  State psi(std::size_t{1} << c.num_qubits(), Amplitude(0));
  psi[0] = 1;
  Brancher(c, dist).run(0, std::move(psi), 0);
  if (std::abs(dist.total() - 1.0) > 1e-9)
    throw ContractError("simulate_distribution: probabilities sum to " +
                        std::to_string(dist.total()));
  return dist;
}

double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  double sum = 0;
  for (const auto& [key, pv] : p.probabilities) {
    auto it = q.probabilities.find(key);
    sum += std::abs(pv - (it == q.probabilities.end() ? 0.0 : it->second));
  }
  for (const auto& [key, qv] : q.probabilities)
    if (!p.probabilities.contains(key)) sum += qv;
  return sum / 2;
}

EquivalenceResult equivalence_check(const Circuit& original, const Circuit& rewritten, double tol) {
  const auto p = simulate_distribution(original);
  const auto q = simulate_distribution(rewritten);
  EquivalenceResult r;
  r.tvd = total_variation(p, q);
  r.pass = r.tvd <= tol;
  r.branches = p.branches + q.branches;
  return r;
}

EquivalenceResult equivalence_check(const Circuit& original, const DynamicCircuit& rewritten,
                                    double tol) {
  return equivalence_check(original, rewritten.circuit, tol);
}

namespace {

class ChainSearch {
 public:
  explicit ChainSearch(const Circuit& c)
      : dag_(build_dag(c)), n_(c.num_qubits()), next_(n_, kNone), has_pred_(n_, false),
        visited_(dag_.num_vertices()) {}

  std::size_t min_width() {
    best_edges_ = 0;
    extend(0, 0);
    return n_ - best_edges_;
  }

 private:
  static constexpr QubitId kNone = static_cast<QubitId>(-1);

  /// Is t_target reachable from `from` in the DAG plus the chosen edges?
  bool reaches(VertexId from, VertexId target) {
    std::fill(visited_.begin(), visited_.end(), 0);
    stack_.assign(1, from);
    visited_[from] = 1;
    while (!stack_.empty()) {
      VertexId v = stack_.back();
      stack_.pop_back();
      if (v == target) return true;
      auto push = [&](VertexId w) {
        if (!visited_[w]) {
          visited_[w] = 1;
          stack_.push_back(w);
        }
      };
      for (const auto& e : dag_.out_edges(v)) push(e.to);
      if (dag_.kind(v) == VertexKind::Terminal && next_[dag_.qubit_of(v)] != kNone)
        push(dag_.root(next_[dag_.qubit_of(v)]));
    }
    return false;
  }

  void extend(QubitId a, std::size_t edges) {
    if (edges + (n_ - a) <= best_edges_) return;
    if (a == n_) {
      best_edges_ = edges;
      return;
    }
    for (QubitId b = 0; b < n_; ++b) {
      if (b == a || has_pred_[b]) continue;
      // t_a -> r_b closes a cycle iff r_b already reaches t_a.
      if (reaches(dag_.root(b), dag_.terminal(a))) continue;
      next_[a] = b;
      has_pred_[b] = true;
      extend(a + 1, edges + 1);
      next_[a] = kNone;
      has_pred_[b] = false;
    }
    extend(a + 1, edges);
  }

  CircuitDag dag_;
  std::size_t n_;
  std::vector<QubitId> next_;
  std::vector<bool> has_pred_;
  std::vector<char> visited_;
  std::vector<VertexId> stack_;
  std::size_t best_edges_ = 0;
};

}  // namespace

std::size_t brute_force_min_width(const Circuit& c) {
  if (c.num_qubits() > kMaxBruteForceQubits)
    throw SizeLimitError("brute_force_min_width: " + std::to_string(c.num_qubits()) +
                         " qubits exceeds the limit of " + std::to_string(kMaxBruteForceQubits));
  if (c.num_qubits() == 0) return 0;
  return ChainSearch(c).min_width();
}

}  // namespace gidnet
