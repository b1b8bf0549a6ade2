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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gidnet/bitset.hpp"
#include "gidnet/circuit.hpp"
#include "gidnet/dag.hpp"

namespace gidnet {

/// Square boolean matrix stored as packed bit rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : rows_(n, Bitset(n)) {}
  /// Rows of '0'/'1' characters; all rows must have length rows.size().
  static BoolMatrix from_strings(const std::vector<std::string_view>& rows);

  std::size_t size() const { return rows_.size(); }
  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void assign(std::size_t i, std::size_t j, bool v) { rows_[i].assign(j, v); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }
  Bitset column(std::size_t j) const;

  void clear_row(std::size_t i) { rows_[i].clear(); }
  void clear_column(std::size_t j) {
    for (auto& r : rows_) r.reset(j);
  }
  std::size_t count() const;
  bool any() const;
  BoolMatrix transposed() const;
  /// Rows rendered as '0'/'1' strings.
  std::vector<std::string> to_strings() const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::vector<Bitset> rows_;
};

/// B[i][j] is true iff terminal t_j is reachable from root r_i.
/// Rows are roots, columns terminals.
struct BiadjacencyMatrix {
  BoolMatrix bits;
  std::size_t size() const { return bits.size(); }
  bool reaches(QubitId root, QubitId terminal) const { return bits.at(root, terminal); }
  bool operator==(const BiadjacencyMatrix&) const = default;
};

/// C[i][j] is true iff q_j may occupy the wire right after q_i is measured.
/// Rows are terminals, columns roots. Entries only ever go from true to
/// false once constructed.
struct CandidateMatrix {
  BoolMatrix bits;
  std::size_t size() const { return bits.size(); }
  bool at(QubitId terminal, QubitId root) const { return bits.at(terminal, root); }
  const Bitset& row(QubitId terminal) const { return bits.row(terminal); }
  bool any() const { return bits.any(); }
  bool operator==(const CandidateMatrix&) const = default;
};

/// Reference reachability: one serial depth-first traversal per root.
BiadjacencyMatrix biadjacency_serial(const CircuitDag& dag);

/// Same contract as biadjacency_serial; roots are traversed in parallel
/// with OpenMP. num_threads <= 0 uses the OpenMP default.
BiadjacencyMatrix biadjacency(const CircuitDag& dag, int num_threads = 0);

/// C = all-ones - B^T.
CandidateMatrix candidate_from_biadjacency(const BiadjacencyMatrix& b);

/// Convenience: DAG, biadjacency and candidate matrix of a static circuit.
CandidateMatrix candidate_matrix(const Circuit& c, int num_threads = 1);

/// Records the selection of reuse edge (t_i, r_j) in place. Every entry
/// (t_k, r_l) with C[t_k][r_j] == 0 and C[t_i][r_l] == 0 in the pre-state
/// is cleared, then row t_i and column r_j. Throws ContractError if
/// C[t_i][r_j] is false.
void update_cmatrix(CandidateMatrix& c, QubitId terminal, QubitId root);

/// Number of true entries per terminal row.
std::vector<std::size_t> row_sums(const CandidateMatrix& c);

/// Qubits whose terminal row still has a true entry, ascending.
std::vector<QubitId> available_qubits(const CandidateMatrix& c);

/// Writes B (rows r_i, columns t_j) and C (rows t_i, columns r_j) as 0/1 rows.
void dump_matrices(std::ostream& os, const BiadjacencyMatrix& b, const CandidateMatrix& c);

}  // namespace gidnet
