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

#include "gidnet/matrices.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "gidnet/errors.hpp"
#include "gidnet/parallel.hpp"

namespace gidnet {

BoolMatrix BoolMatrix::from_strings(const std::vector<std::string_view>& rows) {
  BoolMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != '0' && rows[i][j] != '1')
        throw std::invalid_argument("matrix entries must be 0 or 1");
      m.assign(i, j, rows[i][j] == '1');
    }
  }
  return m;
}

Bitset BoolMatrix::column(std::size_t j) const {
  Bitset col(size());
  for (std::size_t i = 0; i < size(); ++i) col.assign(i, rows_[i].test(j));
  return col;
}

std::size_t BoolMatrix::count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

bool BoolMatrix::any() const {
  for (const auto& r : rows_)
    if (r.any()) return true;
  return false;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = rows_[i].find_first(); j < size(); j = rows_[i].find_next(j + 1))
      t.assign(j, i, true);
  return t;
}

std::vector<std::string> BoolMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& r : rows_) {
    std::string s(size(), '0');
    for (std::size_t j = 0; j < size(); ++j)
      if (r.test(j)) s[j] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

/// Marks in `row` every terminal reachable from `root`. `visited` and
/// `stack` are caller-owned scratch space.
void reach_from_root(const CircuitDag& dag, QubitId root, Bitset& row,
                     std::vector<char>& visited, std::vector<VertexId>& stack) {
  std::fill(visited.begin(), visited.end(), 0);
  stack.clear();
  stack.push_back(dag.root(root));
  visited[dag.root(root)] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (dag.kind(v) == VertexKind::Terminal) row.set(dag.qubit_of(v));
    for (const auto& e : dag.out_edges(v)) {
      if (!visited[e.to]) {
        visited[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
}

}  // namespace

BiadjacencyMatrix biadjacency_serial(const CircuitDag& dag) {
  const std::size_t n = dag.num_qubits();
  BiadjacencyMatrix b{BoolMatrix(n)};
  std::vector<char> visited(dag.num_vertices());
  std::vector<VertexId> stack;
  for (QubitId r = 0; r < n; ++r) reach_from_root(dag, r, b.bits.row(r), visited, stack);
  return b;
}

BiadjacencyMatrix biadjacency(const CircuitDag& dag, int num_threads) {
  const auto n = static_cast<std::ptrdiff_t>(dag.num_qubits());
  BiadjacencyMatrix b{BoolMatrix(dag.num_qubits())};
  // Each root writes only its own row.
#pragma omp parallel num_threads(resolve_threads(num_threads)) if (n > 1)
  {
    std::vector<char> visited(dag.num_vertices());
    std::vector<VertexId> stack;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t r = 0; r < n; ++r)
      reach_from_root(dag, static_cast<QubitId>(r), b.bits.row(static_cast<std::size_t>(r)),
                      visited, stack);
  }
  return b;
}

CandidateMatrix candidate_from_biadjacency(const BiadjacencyMatrix& b) {
  CandidateMatrix c{b.bits.transposed()};
  for (std::size_t i = 0; i < c.size(); ++i) {
    Bitset& row = c.bits.row(i);
    Bitset ones(c.size());
    ones.fill();
    row = ones.subtract(row);
  }
  return c;
}

CandidateMatrix candidate_matrix(const Circuit& c, int num_threads) {
  return candidate_from_biadjacency(biadjacency(build_dag(c), num_threads));
}

void update_cmatrix(CandidateMatrix& c, QubitId terminal, QubitId root) {
  const std::size_t n = c.size();
  if (terminal >= n || root >= n || !c.at(terminal, root))
    throw ContractError("update_cmatrix: (t" + std::to_string(terminal) + ", r" +
                        std::to_string(root) + ") is not a candidate edge");
  // Roots that already reach t_i (zeros of row t_i) and terminals that r_j
  // already reaches (zeros of column r_j), both from the pre-state.
  Bitset blocked_roots(n);
  blocked_roots.fill();
  blocked_roots.subtract(c.row(terminal));
  for (std::size_t k = 0; k < n; ++k)
    if (!c.at(k, root)) c.bits.row(k).subtract(blocked_roots);
  c.bits.clear_row(terminal);
  c.bits.clear_column(root);
}

std::vector<std::size_t> row_sums(const CandidateMatrix& c) {
  std::vector<std::size_t> sums(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) sums[i] = c.row(i).count();
  return sums;
}

std::vector<QubitId> available_qubits(const CandidateMatrix& c) {
  std::vector<QubitId> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.row(i).any()) out.push_back(i);
  return out;
}

void dump_matrices(std::ostream& os, const BiadjacencyMatrix& b, const CandidateMatrix& c) {
  auto dump = [&](std::string_view title, char row_label, char col_label, const BoolMatrix& m) {
    os << title << "\ncolumns:";
    for (std::size_t j = 0; j < m.size(); ++j) os << ' ' << col_label << j;
    os << '\n';
    auto rows = m.to_strings();
    for (std::size_t i = 0; i < rows.size(); ++i) os << row_label << i << ": " << rows[i] << '\n';
  };
  dump("B", 'r', 't', b.bits);
  dump("C", 't', 'r', c.bits);
}

}  // namespace gidnet
