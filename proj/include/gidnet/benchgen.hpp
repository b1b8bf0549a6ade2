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
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gidnet/circuit.hpp"

namespace gidnet {

/// Random-circuit-sampling style lattice circuit.
struct GrcsSpec {
  std::size_t rows = 4;
  std::size_t cols = 4;
  std::size_t depth = 11;  // number of CZ cycles
  std::uint64_t seed = 0;
};

/// One entry of the fixed CZ schedule: which lattice edges fire together.
struct CzPattern {
  bool horizontal;
  std::size_t offset;   // parity of the edge's lower coordinate along its axis
  std::size_t stagger;  // parity of the edge's coordinate across its axis
};

/// Eight patterns partitioning all lattice edges; cycle k uses entry k mod 8.
inline constexpr std::array<CzPattern, 8> kCzSchedule{{
    {true, 0, 0},
    {true, 1, 1},
    {false, 0, 0},
    {false, 1, 1},
    {true, 0, 1},
    {true, 1, 0},
    {false, 0, 1},
    {false, 1, 0},
}};

/// Qubit pairs of one pattern on a rows x cols lattice (qubit = r * cols + c).
std::vector<std::pair<QubitId, QubitId>> cz_pattern_edges(std::size_t rows, std::size_t cols,
                                                          const CzPattern& pattern);

/// H on every qubit, then `depth` cycles of one CZ pattern plus a random
/// gate from {sx, sy, t} on every idle qubit (never the same gate twice in a
/// row on a qubit), then measure-all. Throws std::invalid_argument on an
/// empty lattice or zero depth.
Circuit gen_grcs(const GrcsSpec& spec);

/// Most nearly square rows x cols factorization of n (rows <= cols).
std::pair<std::size_t, std::size_t> lattice_shape(std::size_t n);

/// Simple undirected 3-regular graph; edges are (i < j), sorted.
struct U3RGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Configuration-model pairing of 3n stubs, resampled until simple.
/// Throws std::invalid_argument unless n is even and >= 4.
U3RGraph gen_u3r(std::size_t n, std::uint64_t seed);

/// True when every vertex has degree 3 and there are no loops or multi-edges.
bool is_simple_3_regular(const U3RGraph& g);

/// "n <count>" then one "i j" line per edge.
std::string edge_list_text(const U3RGraph& g);

inline constexpr double kDefaultGamma = 0.7;
inline constexpr double kDefaultBeta = 0.3;

struct QaoaSpec {
  U3RGraph graph;
  std::size_t p = 1;
  std::vector<double> gammas;  // length p
  std::vector<double> betas;   // length p

  /// Spec with the default angles repeated for every layer.
  static QaoaSpec with_default_angles(U3RGraph graph, std::size_t p);
};

/// MaxCut QAOA: H on every qubit; per layer, cx(i,j) rz(2 gamma) q[j]
/// cx(i,j) per edge in sorted order, then rx(2 beta) on every qubit;
/// measure-all. Throws std::invalid_argument on mismatched angle lists.
Circuit gen_qaoa(const QaoaSpec& spec);

}  // namespace gidnet
