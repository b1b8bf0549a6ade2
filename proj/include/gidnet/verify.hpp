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

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "gidnet/circuit.hpp"
#include "gidnet/rewrite.hpp"

namespace gidnet {

using Amplitude = std::complex<double>;
/// Row-major 2x2 unitary.
using Matrix2 = std::array<Amplitude, 4>;

/// Matrix of a single-qubit gate. Throws ContractError if the result is not
/// unitary to 1e-12 or the gate is not single-qubit.
Matrix2 gate_matrix(Gate g, std::span<const double> params);

/// Largest entry of |U^dagger U - I|.
double unitarity_defect(const Matrix2& u);

inline constexpr std::size_t kMaxSimWires = 12;
inline constexpr std::size_t kMaxSimClbits = 20;
inline constexpr std::size_t kMaxBruteForceQubits = 7;

/// Exact distribution over classical registers. Keys have one character per
/// classical bit, bit 0 first; unwritten bits read '0'.
struct OutcomeDistribution {
  std::map<std::string, double> probabilities;
  std::size_t branches = 0;  // leaves of the measurement branching tree

  double total() const;
};

/// Runs `c` from |0...0> branching on every measurement and reset.
/// Throws SizeLimitError beyond kMaxSimWires wires or kMaxSimClbits bits.
OutcomeDistribution simulate_distribution(const Circuit& c);

/// Sum over outcomes of |p - q| / 2.
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);

struct EquivalenceResult {
  bool pass = false;
  double tvd = 0;
  std::size_t branches = 0;  // total over both simulations
};

inline constexpr double kDefaultEquivalenceTolerance = 1e-9;

EquivalenceResult equivalence_check(const Circuit& original, const Circuit& rewritten,
                                    double tol = kDefaultEquivalenceTolerance);
EquivalenceResult equivalence_check(const Circuit& original, const DynamicCircuit& rewritten,
                                    double tol = kDefaultEquivalenceTolerance);

/// Exact minimum width over all valid reuse solutions, by exhaustive
/// search over chain structures with explicit cycle checks on the
/// augmented DAG. Throws SizeLimitError above kMaxBruteForceQubits.
std::size_t brute_force_min_width(const Circuit& c);

}  // namespace gidnet
