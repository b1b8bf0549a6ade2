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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gidnet/bitset.hpp"
#include "gidnet/circuit.hpp"
#include "gidnet/matrices.hpp"
#include "gidnet/rng.hpp"

namespace gidnet {

/// Set of logical qubits, as a bitset over [0, n).
using QubitSet = Bitset;

/// Logical qubits sharing one wire, in execution order. Consecutive pairs
/// (a, b) are candidate edges t_a -> r_b.
using ReuseSequence = std::vector<QubitId>;

/// Partition of the logical qubits into reuse sequences; one per virtual qubit.
struct ReuseSolution {
  std::vector<ReuseSequence> sequences;

  std::size_t width() const { return sequences.size(); }
  bool operator==(const ReuseSolution&) const = default;

  static ReuseSolution singletons(std::size_t n);
};

enum class TieBreak { Random, LowestIndex };

struct SearchConfig {
  std::optional<std::size_t> iterations;  // nullopt = auto
  std::uint64_t seed = 0x6769644E4554ULL;
  TieBreak tie_break = TieBreak::Random;
  int threads = 1;  // > 1 runs iterations concurrently; 0 = OpenMP default

  /// Explicit count, or max(1, ceil(log2 n)) when auto.
  std::size_t resolved_iterations(std::size_t n) const;
};

/// Selects among equally good candidates. Only consulted when there are
/// at least two.
class Chooser {
 public:
  virtual ~Chooser() = default;
  /// Returns an index into `candidates` (ascending qubit order).
  virtual std::size_t choose(std::span<const QubitId> candidates) = 0;
};

class RandomChooser final : public Chooser {
 public:
  explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
  std::size_t choose(std::span<const QubitId> candidates) override {
    return uniform_index(rng_, candidates.size());
  }

 private:
  Rng rng_;
};

class LowestIndexChooser final : public Chooser {
 public:
  std::size_t choose(std::span<const QubitId>) override { return 0; }
};

/// P_i: roots still open to follow terminal t_i.
QubitSet potential_reuse(const CandidateMatrix& c, QubitId q);

/// N_x: intersection of P_k over k in seq + {x}.
QubitSet common_neighbors(const CandidateMatrix& c, std::span<const QubitId> seq, QubitId x);

/// Common-neighbor sets of every candidate in a potential set.
struct NeighborTable {
  QubitSet potential;
  std::vector<std::pair<QubitId, QubitSet>> neighbors;  // ascending by qubit

  const QubitSet& of(QubitId q) const;
  /// Largest |N_j| over the table (0 when empty).
  std::size_t max_size() const;
  /// Qubits attaining max_size(), ascending.
  std::vector<QubitId> argmax() const;
};

/// Table for the current potential set. `potential` must equal the
/// intersection of P_k over the sequence built so far, so that each entry
/// reduces to potential & P_j.
NeighborTable neighbor_table(const CandidateMatrix& c, const QubitSet& potential);

/// I_j = sum over k in M, k != j, of |N_j & N_k|, where M is the argmax set
/// of |N|. Throws ContractError if q is not in M.
std::size_t reuse_score(const NeighborTable& table, QubitId q);

/// Greedily grows a reuse sequence from q, then records every consecutive
/// pair in `c` via update_cmatrix. `c` is modified in place. Requires q to
/// have at least one candidate edge.
ReuseSequence best_reuse_sequence(CandidateMatrix& c, QubitId q, Chooser& chooser);

/// Joins sequences that share endpoints into maximal chains. Throws
/// ContractError if a qubit has two successors or predecessors, or the
/// successor relation has a cycle.
std::vector<ReuseSequence> merge_subsets(std::span<const ReuseSequence> sequences);

/// Appends a singleton for every qubit in [0, n) not covered. Throws
/// ContractError on a duplicate or out-of-range qubit.
ReuseSolution finalize_reuse(std::vector<ReuseSequence> sequences, std::size_t n);

/// Solution of one search iteration on a private copy of `c`.
ReuseSolution search_iteration(const CandidateMatrix& c, Chooser& chooser);

struct SearchResult {
  ReuseSolution solution;
  std::size_t iterations = 0;  // resolved iteration count
  std::uint64_t seed = 0;
  bool irreducible = false;
  std::size_t original_width = 0;
};

/// Reference search: iterations run one after another.
SearchResult search_serial(const CandidateMatrix& c, const SearchConfig& config);

/// Same result as search_serial for the same config; iterations are spread
/// over OpenMP threads and reduced by (width, iteration index).
SearchResult search_parallel(const CandidateMatrix& c, const SearchConfig& config);

/// Full pass on a static circuit: DAG, matrices, search. Dispatches to the
/// parallel search when config.threads != 1.
SearchResult gidnet(const Circuit& circuit, const SearchConfig& config);

/// {"original_width", "width", "irreducible", "sequences", "iterations", "seed"}
std::string solution_json(const SearchResult& result);

}  // namespace gidnet
