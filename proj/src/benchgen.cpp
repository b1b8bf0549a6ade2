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

#include "gidnet/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gidnet/rng.hpp"

namespace gidnet {

std::vector<std::pair<QubitId, QubitId>> cz_pattern_edges(std::size_t rows, std::size_t cols,
                                                          const CzPattern& pattern) {
  std::vector<std::pair<QubitId, QubitId>> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (pattern.horizontal) {
        if (c + 1 < cols && c % 2 == pattern.offset && r % 2 == pattern.stagger)
          edges.emplace_back(r * cols + c, r * cols + c + 1);
      } else {
        if (r + 1 < rows && r % 2 == pattern.offset && c % 2 == pattern.stagger)
          edges.emplace_back(r * cols + c, (r + 1) * cols + c);
      }
    }
  }
  return edges;
}

Circuit gen_grcs(const GrcsSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("gen_grcs: empty lattice");
  if (spec.depth == 0) throw std::invalid_argument("gen_grcs: depth must be at least 1");
  const std::size_t n = spec.rows * spec.cols;
  Rng rng(derive_seed(spec.seed, 0x475243ULL));
  static constexpr std::array<Gate, 3> kSingle{Gate::SX, Gate::SY, Gate::T};

  Circuit c(n, n);
  for (QubitId q = 0; q < n; ++q) c.h(q);
  std::vector<int> last(n, -1);  // index into kSingle of the previous gate
  for (std::size_t cycle = 0; cycle < spec.depth; ++cycle) {
    std::vector<bool> busy(n, false);
    for (auto [a, b] : cz_pattern_edges(spec.rows, spec.cols, kCzSchedule[cycle % 8])) {
      c.cz(a, b);
      busy[a] = busy[b] = true;
    }
    for (QubitId q = 0; q < n; ++q) {
      if (busy[q]) continue;
      int choice;
      if (last[q] < 0) {
        choice = static_cast<int>(uniform_index(rng, 3));
      } else {
        // Uniform over the two gates that differ from the previous one.
        choice = static_cast<int>(uniform_index(rng, 2));
        if (choice >= last[q]) ++choice;
      }
      last[q] = choice;
      c.gate(kSingle[static_cast<std::size_t>(choice)], {q});
    }
  }
  c.measure_all();
  return c;
}

std::pair<std::size_t, std::size_t> lattice_shape(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lattice_shape: n must be positive");
  std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (rows * rows > n) --rows;
  while ((rows + 1) * (rows + 1) <= n) ++rows;
  while (n % rows != 0) --rows;
  return {rows, n / rows};
}

U3RGraph gen_u3r(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("gen_u3r: vertex count must be even and at least 4");
  Rng rng(derive_seed(seed, 0x553352ULL));
  std::vector<std::size_t> stubs(3 * n);
  while (true) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / 3;
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[uniform_index(rng, i + 1)]);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
      simple = a != b && edges.emplace(a, b).second;
    }
    if (simple) return {n, {edges.begin(), edges.end()}};
  }
}

bool is_simple_3_regular(const U3RGraph& g) {
  std::vector<std::size_t> degree(g.n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b || a >= g.n || b >= g.n) return false;
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) return false;
    ++degree[a];
    ++degree[b];
  }
  return std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 3; });
}

std::string edge_list_text(const U3RGraph& g) {
  std::ostringstream os;
  os << "n " << g.n << '\n';
  for (auto [a, b] : g.edges) os << a << ' ' << b << '\n';
  return os.str();
}

QaoaSpec QaoaSpec::with_default_angles(U3RGraph graph, std::size_t p) {
  QaoaSpec spec;
  spec.graph = std::move(graph);
  spec.p = p;
  spec.gammas.assign(p, kDefaultGamma);
  spec.betas.assign(p, kDefaultBeta);
  return spec;
}

Circuit gen_qaoa(const QaoaSpec& spec) {
  if (spec.gammas.size() != spec.p || spec.betas.size() != spec.p)
    throw std::invalid_argument("gen_qaoa: need exactly p gammas and p betas");
  const std::size_t n = spec.graph.n;
  auto edges = spec.graph.edges;
  for (auto& e : edges) e = std::minmax(e.first, e.second);
  std::sort(edges.begin(), edges.end());

  Circuit c(n, n);
  for (QubitId q = 0; q < n; ++q) c.h(q);
  for (std::size_t layer = 0; layer < spec.p; ++layer) {
    for (auto [i, j] : edges) {
      c.cx(i, j);
      c.rz(2 * spec.gammas[layer], j);
      c.cx(i, j);
    }
    for (QubitId q = 0; q < n; ++q) c.rx(2 * spec.betas[layer], q);
  }
  c.measure_all();
  return c;
}

}  // namespace gidnet
