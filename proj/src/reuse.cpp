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

#include "gidnet/reuse.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>

#include "gidnet/errors.hpp"
#include "gidnet/parallel.hpp"
#include "json.hpp"

namespace gidnet {

ReuseSolution ReuseSolution::singletons(std::size_t n) {
  ReuseSolution s;
  s.sequences.reserve(n);
  for (QubitId q = 0; q < n; ++q) s.sequences.push_back({q});
  return s;
}

std::size_t SearchConfig::resolved_iterations(std::size_t n) const {
  if (iterations) {
    if (*iterations == 0) throw std::invalid_argument("iterations must be positive");
    return *iterations;
  }
  if (n <= 1) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(n - 1)));
}

QubitSet potential_reuse(const CandidateMatrix& c, QubitId q) { return c.row(q); }

QubitSet common_neighbors(const CandidateMatrix& c, std::span<const QubitId> seq, QubitId x) {
  QubitSet result = c.row(x);
  for (QubitId k : seq) result &= c.row(k);
  return result;
}

const QubitSet& NeighborTable::of(QubitId q) const {
  auto it = std::lower_bound(neighbors.begin(), neighbors.end(), q,
                             [](const auto& entry, QubitId v) { return entry.first < v; });
  if (it == neighbors.end() || it->first != q)
    throw ContractError("qubit " + std::to_string(q) + " is not in the neighbor table");
  return it->second;
}

std::size_t NeighborTable::max_size() const {
  std::size_t best = 0;
  for (const auto& [q, set] : neighbors) best = std::max(best, set.count());
  return best;
}

std::vector<QubitId> NeighborTable::argmax() const {
  const std::size_t best = max_size();
  std::vector<QubitId> out;
  for (const auto& [q, set] : neighbors)
    if (set.count() == best) out.push_back(q);
  return out;
}

NeighborTable neighbor_table(const CandidateMatrix& c, const QubitSet& potential) {
  NeighborTable table;
  table.potential = potential;
  for (QubitId j = potential.find_first(); j < potential.size(); j = potential.find_next(j + 1))
    table.neighbors.emplace_back(j, potential & c.row(j));
  return table;
}

std::size_t reuse_score(const NeighborTable& table, QubitId q) {
  const auto best = table.argmax();
  if (!std::binary_search(best.begin(), best.end(), q))
    throw ContractError("reuse_score: qubit " + std::to_string(q) +
                        " does not have a maximal common-neighbor set");
  const QubitSet& mine = table.of(q);
  std::size_t score = 0;
  for (QubitId k : best)
    if (k != q) score += Bitset::intersection_count(mine, table.of(k));
  return score;
}

namespace {

QubitId pick(std::span<const QubitId> candidates, Chooser& chooser) {
  if (candidates.size() == 1) return candidates[0];
  std::size_t idx = chooser.choose(candidates);
  if (idx >= candidates.size()) throw ContractError("chooser returned an out-of-range index");
  return candidates[idx];
}

}  // namespace

ReuseSequence best_reuse_sequence(CandidateMatrix& c, QubitId q, Chooser& chooser) {
  if (q >= c.size() || c.row(q).none())
    throw ContractError("best_reuse_sequence: qubit " + std::to_string(q) + " is not available");
  ReuseSequence seq{q};
  QubitSet potential = potential_reuse(c, q);
  while (potential.any()) {
    const NeighborTable table = neighbor_table(c, potential);
    QubitId next;
    if (table.max_size() == 0) {
      // Every extension is terminal; take any of them and stop.
      next = pick(potential.indices(), chooser);
      seq.push_back(next);
      break;
    }
    const auto best = table.argmax();
    if (best.size() == 1) {
      next = best[0];
    } else {
      std::vector<std::size_t> scores;
      scores.reserve(best.size());
      for (QubitId j : best) scores.push_back(reuse_score(table, j));
      const std::size_t top = *std::max_element(scores.begin(), scores.end());
      std::vector<QubitId> leaders;
      for (std::size_t i = 0; i < best.size(); ++i)
        if (scores[i] == top) leaders.push_back(best[i]);
      next = pick(leaders, chooser);
    }
    seq.push_back(next);
    potential = table.of(next);
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) update_cmatrix(c, seq[k], seq[k + 1]);
  return seq;
}

std::vector<ReuseSequence> merge_subsets(std::span<const ReuseSequence> sequences) {
  std::map<QubitId, QubitId> succ;
  std::map<QubitId, QubitId> pred;
  for (const auto& seq : sequences) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      const QubitId a = seq[k];
      const QubitId b = seq[k + 1];
      auto [sit, s_new] = succ.emplace(a, b);
      if (!s_new && sit->second != b)
        throw ContractError("merge_subsets: qubit " + std::to_string(a) + " has two successors");
      auto [pit, p_new] = pred.emplace(b, a);
      if (!p_new && pit->second != a)
        throw ContractError("merge_subsets: qubit " + std::to_string(b) +
                            " has two predecessors");
    }
  }

  std::vector<ReuseSequence> out;
  std::map<QubitId, bool> emitted;
  std::size_t emitted_count = 0;
  for (const auto& seq : sequences) {
    for (QubitId q : seq) {
      if (!succ.contains(q) || pred.contains(q) || emitted[q]) continue;
      ReuseSequence chain{q};
      emitted[q] = true;
      for (auto it = succ.find(q); it != succ.end(); it = succ.find(it->second)) {
        chain.push_back(it->second);
        emitted[it->second] = true;
      }
      emitted_count += chain.size();
      out.push_back(std::move(chain));
    }
  }
  // Nodes with a successor or predecessor that no head reached lie on a cycle.
  std::map<QubitId, bool> linked;
  for (const auto& [a, b] : succ) linked[a] = linked[b] = true;
  if (emitted_count != linked.size())
    throw ContractError("merge_subsets: successor relation contains a cycle");
  return out;
}

ReuseSolution finalize_reuse(std::vector<ReuseSequence> sequences, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const auto& seq : sequences) {
    if (seq.empty()) throw ContractError("finalize_reuse: empty sequence");
    for (QubitId q : seq) {
      if (q >= n) throw ContractError("finalize_reuse: qubit " + std::to_string(q) + " out of range");
      if (seen[q]) throw ContractError("finalize_reuse: qubit " + std::to_string(q) + " repeated");
      seen[q] = true;
    }
  }
  ReuseSolution solution{std::move(sequences)};
  for (QubitId q = 0; q < n; ++q)
    if (!seen[q]) solution.sequences.push_back({q});
  return solution;
}

ReuseSolution search_iteration(const CandidateMatrix& c, Chooser& chooser) {
  CandidateMatrix work = c;
  std::vector<ReuseSequence> found;
  while (work.any()) {
    const auto available = available_qubits(work);
    const QubitId start = pick(available, chooser);
    ReuseSequence seq = best_reuse_sequence(work, start, chooser);
    if (seq.size() > 1) found.push_back(std::move(seq));
  }
  return finalize_reuse(merge_subsets(found), c.size());
}

namespace {

std::unique_ptr<Chooser> iteration_chooser(const SearchConfig& config, std::size_t iteration) {
  if (config.tie_break == TieBreak::LowestIndex) return std::make_unique<LowestIndexChooser>();
  return std::make_unique<RandomChooser>(derive_seed(config.seed, iteration));
}

SearchResult prepare(const CandidateMatrix& c, const SearchConfig& config) {
  SearchResult result;
  result.iterations = config.resolved_iterations(c.size());
  result.seed = config.seed;
  result.original_width = c.size();
  result.solution = ReuseSolution::singletons(c.size());
  result.irreducible = !c.any();
  return result;
}

}  // namespace

SearchResult search_serial(const CandidateMatrix& c, const SearchConfig& config) {
  SearchResult result = prepare(c, config);
  if (result.irreducible) return result;
  for (std::size_t it = 0; it < result.iterations; ++it) {
    auto chooser = iteration_chooser(config, it);
    ReuseSolution candidate = search_iteration(c, *chooser);
    if (candidate.width() < result.solution.width()) result.solution = std::move(candidate);
    if (result.solution.width() == 1) break;
  }
  return result;
}

SearchResult search_parallel(const CandidateMatrix& c, const SearchConfig& config) {
  SearchResult result = prepare(c, config);
  if (result.irreducible) return result;
  const auto iterations = static_cast<std::ptrdiff_t>(result.iterations);
  std::vector<std::optional<ReuseSolution>> solutions(result.iterations);
  // Lowest iteration index that reached width 1; later iterations are moot.
  std::atomic<std::size_t> first_optimal{std::numeric_limits<std::size_t>::max()};

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(config.threads))
  for (std::ptrdiff_t it = 0; it < iterations; ++it) {
    const auto idx = static_cast<std::size_t>(it);
    if (idx > first_optimal.load(std::memory_order_relaxed)) continue;
    auto chooser = iteration_chooser(config, idx);
    solutions[idx] = search_iteration(c, *chooser);
    if (solutions[idx]->width() == 1) {
      std::size_t seen = first_optimal.load();
      while (idx < seen && !first_optimal.compare_exchange_weak(seen, idx)) {
      }
    }
  }

  for (auto& candidate : solutions) {
    if (!candidate) continue;
    if (candidate->width() < result.solution.width()) result.solution = std::move(*candidate);
  }
  return result;
}

SearchResult gidnet(const Circuit& circuit, const SearchConfig& config) {
  const CandidateMatrix c = candidate_matrix(circuit, config.threads);
  return config.threads == 1 ? search_serial(c, config) : search_parallel(c, config);
}

std::string solution_json(const SearchResult& result) {
  nlohmann::json j;
  j["original_width"] = result.original_width;
  j["width"] = result.solution.width();
  j["irreducible"] = result.irreducible;
  j["sequences"] = result.solution.sequences;
  j["iterations"] = result.iterations;
  j["seed"] = result.seed;
  return j.dump();
}

}  // namespace gidnet
