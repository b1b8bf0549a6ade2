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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// gated criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gidnet/benchgen.hpp"
#include "gidnet/harness.hpp"
#include "gidnet/matrices.hpp"
#include "gidnet/reuse.hpp"
#include "gidnet/rewrite.hpp"
#include "gidnet/verify.hpp"
#include "support/random_circuit.hpp"
#include "support/run_command.hpp"

namespace {

using namespace gidnet;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool gated = true;
  std::string label;  // overrides PASS/FAIL when set
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

Circuit load_worked_example() { return parse_circuit(read_text_file(std::string(GIDNET_DATA_DIR) + "/worked_example.qasm")); }

// 1. Worked example compiles to width 2; the reference solution is valid.
Outcome worked_example() {
  const auto t0 = Clock::now();
  const Circuit c = load_worked_example();
  SearchConfig cfg;
  const SearchResult r = gidnet::gidnet(c, cfg);
  const DynamicCircuit d = rewrite_dynamic(c, r.solution);
  std::set<QubitId> covered;
  std::size_t total = 0;
  for (const auto& s : r.solution.sequences) {
    covered.insert(s.begin(), s.end());
    total += s.size();
  }
  const ReuseSolution reference{{{0, 2, 3, 1}, {4}}};
  const bool reference_ok = validate_solution(c, reference).ok &&
                            rewrite_dynamic(c, reference).width() == 2 &&
                            equivalence_check(c, rewrite_dynamic(c, reference)).pass;
  // How often the search itself lands on the reference solution.
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SearchConfig s;
    s.seed = seed;
    s.iterations = 1;
    const auto sol = gidnet::gidnet(c, s).solution;
    hits += std::set<ReuseSequence>(sol.sequences.begin(), sol.sequences.end()) ==
            std::set<ReuseSequence>(reference.sequences.begin(), reference.sequences.end());
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = r.solution.width() == 2 && d.width() == 2 && total == 5 && covered.size() == 5 &&
           reference_ok && validate_solution(c, r.solution).ok && secs < 1.0;
  o.detail = "width " + std::to_string(r.solution.width()) + ", reference solution " +
             (reference_ok ? "valid" : "INVALID") + ", found by " + std::to_string(hits) +
             "/200 single-iteration seeds, " + fmt(secs) + " s";
  return o;
}

// 2. B and C of the worked example, bit-exact.
Outcome matrix_fidelity() {
  const auto b = biadjacency(build_dag(load_worked_example()));
  const auto c = candidate_from_biadjacency(b);
  const std::vector<std::string> want_b{"10111", "01000", "00111", "00011", "10111"};
  const std::vector<std::string> want_c{"01110", "10111", "01010", "01000", "01000"};
  std::size_t mismatches = 0;
  const auto got_b = b.bits.to_strings();
  const auto got_c = c.bits.to_strings();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      mismatches += (got_b[i][j] != want_b[i][j]) + (got_c[i][j] != want_c[i][j]);
  return {mismatches == 0, std::to_string(50 - mismatches) + "/50 entries match"};
}

// 3. Values from the worked trace.
Outcome trace_fidelity() {
  const CandidateMatrix c{BoolMatrix::from_strings({"01110", "10111", "01010", "01000", "01000"})};
  auto s = [](std::initializer_list<std::size_t> v) { return QubitSet(5, v); };
  std::size_t ok = 0, total = 0;
  auto check = [&](bool v) {
    ++total;
    ok += v;
  };
  check(potential_reuse(c, 0) == s({1, 2, 3}));
  const std::vector<QubitId> f0{0}, f02{0, 2};
  check(common_neighbors(c, f0, 1) == s({2, 3}));
  check(common_neighbors(c, f0, 2) == s({1, 3}));
  check(common_neighbors(c, f0, 3) == s({1}));
  const NeighborTable t1 = neighbor_table(c, potential_reuse(c, 0));
  check(reuse_score(t1, 1) == 1);
  check(reuse_score(t1, 2) == 1);
  check(common_neighbors(c, f02, 1) == s({3}));
  check(common_neighbors(c, f02, 3) == s({1}));
  const NeighborTable t2 = neighbor_table(c, t1.of(2));
  check(reuse_score(t2, 1) == 0);
  check(reuse_score(t2, 3) == 0);
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " trace values match"};
}

// 4. Random-circuit oracle suite.
Outcome oracle_suite() {
  const auto t0 = Clock::now();
  constexpr int kCircuits = 1000;
  Rng rng(derive_seed(2026, 4));
  std::size_t invalid = 0, inequivalent = 0, below_bound = 0;
  double worst_tvd = 0;
  std::map<std::size_t, std::size_t> gaps;
  for (int i = 0; i < kCircuits; ++i) {
    testing::RandomCircuitOptions opt;
    opt.max_qubits = 6;
    opt.max_gates = 12;
    if (i % 2) {  // half the suite exercises the optional circuit features
      opt.mid_measure_chance = 0.15;
      opt.leading_reset_chance = 0.15;
      opt.unmeasured_chance = 0.1;
      opt.barriers = true;
    }
    const Circuit c = testing::random_circuit(rng, opt);
    SearchConfig cfg;
    cfg.seed = derive_seed(2026, 1000 + static_cast<std::uint64_t>(i));
    const auto sol = gidnet::gidnet(c, cfg).solution;
    if (!validate_solution(c, sol).ok) {
      ++invalid;
      continue;
    }
    const auto eq = equivalence_check(c, rewrite_dynamic(c, sol), 1e-9);
    worst_tvd = std::max(worst_tvd, eq.tvd);
    if (!eq.pass) ++inequivalent;
    const std::size_t lb = brute_force_min_width(c);
    if (sol.width() < lb)
      ++below_bound;
    else
      ++gaps[sol.width() - lb];
  }
  const double secs = seconds_since(t0);
  std::string hist;
  for (auto [gap, count] : gaps) hist += " gap" + std::to_string(gap) + "=" + std::to_string(count);
  Outcome o;
  o.pass = invalid == 0 && inequivalent == 0 && below_bound == 0 && secs < 600;
  o.detail = std::to_string(kCircuits) + " circuits, invalid " + std::to_string(invalid) +
             ", inequivalent " + std::to_string(inequivalent) + " (max tvd " + fmt(worst_tvd, 3) +
             "), below brute-force bound " + std::to_string(below_bound) + ";" + hist + "; " +
             fmt(secs) + " s";
  return o;
}

// 5. QAOA p=1 on 3-regular graphs always compresses.
Outcome reducibility() {
  std::size_t failures = 0;
  std::string detail;
  for (std::size_t n : {8, 12, 16}) {
    std::size_t lo = n, hi = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Circuit c = gen_qaoa(QaoaSpec::with_default_angles(gen_u3r(n, derive_seed(5, seed)), 1));
      const std::size_t w = gidnet::gidnet(c, {}).solution.width();
      if (w >= n) ++failures;
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    detail += "n=" + std::to_string(n) + " widths " + std::to_string(lo) + ".." +
              std::to_string(hi) + "; ";
  }
  return {failures == 0, detail + std::to_string(failures) + " of 60 instances not reduced"};
}

// 6. Runtime scaling fit (soft).
Outcome scaling() {
  const auto t0 = Clock::now();
  BenchOptions opt;
  opt.family = Family::Grcs;
  opt.sizes = {16, 36, 64, 100, 144};
  opt.depth_or_p = 11;
  opt.repeats = 10;
  opt.time_reps = 7;
  opt.seed = 6;
  const auto records = run_bench(opt);
  const FitReport fit = fit_polynomial(records, 3);
  Outcome o;
  o.pass = fit.r_squared >= 0.95;
  o.detail = "degree 3 R^2 " + fmt(fit.r_squared, 6) + " (expected >= 0.99: " +
             (fit.r_squared >= 0.99 ? "yes" : "no") + "), F " + fmt(fit.f_statistic, 6) +
             ", mean runtimes";
  for (const auto& r : records) o.detail += " " + std::to_string(r.n) + ":" + fmt(r.mean_runtime_s, 3) + "s";
  o.detail += "; " + fmt(seconds_since(t0)) + " s";
  return o;
}

// 7. Byte-identical artifacts from repeated CLI runs.
Outcome determinism() {
  const auto dir = testing::scratch_dir("acceptance-determinism");
  const std::string cli = "'" + testing::cli() + "'";
  auto path = [&](const std::string& name) { return "'" + (dir / name).string() + "'"; };
  auto file = [&](const std::string& name) { return read_text_file((dir / name).string()); };
  auto width_columns = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      for (std::size_t k = 0; k < 6 && k < cells.size(); ++k) out += cells[k] + ",";
      out += "\n";
    }
    return out;
  };

  std::size_t compared = 0, differing = 0, failed_runs = 0;
  std::map<int, std::map<std::string, std::string>> runs;
  for (int run = 0; run < 2; ++run) {
    const std::string s = std::to_string(run);
    const std::vector<std::string> commands{
        cli + " --seed 11 gen grcs --rows 4 --cols 5 --depth 12 -o " + path("grcs" + s + ".qasm"),
        cli + " --seed 12 gen qaoa --n 12 --p 2 -o " + path("qaoa" + s + ".qasm") +
            " --graph-out " + path("graph" + s + ".txt"),
        cli + " --quiet --seed 13 compile " + path("grcs" + s + ".qasm") + " -o " +
            path("grcs" + s + ".dyn.qasm") + " --solution " + path("grcs" + s + ".json"),
        cli + " --quiet --seed 14 --iterations 6 compile " + path("qaoa" + s + ".qasm") + " -o " +
            path("qaoa" + s + ".dyn.qasm") + " --solution " + path("qaoa" + s + ".json"),
        cli + " --quiet --seed 15 bench --family qaoa --sizes 8,10 --p 1 --repeats 4 "
              "--time-reps 1 --out " + path("bench" + s + ".csv"),
    };
    for (const auto& cmd : commands)
      if (testing::run_command(cmd).exit_code != 0) ++failed_runs;
    if (failed_runs) break;
    for (const char* stem : {"grcs", "qaoa"}) {
      runs[run][std::string(stem) + ".qasm"] = file(stem + s + ".qasm");
      runs[run][std::string(stem) + ".dyn.qasm"] = file(stem + s + ".dyn.qasm");
      runs[run][std::string(stem) + ".json"] = file(stem + s + ".json");
    }
    runs[run]["graph.txt"] = file("graph" + s + ".txt");
    runs[run]["bench widths"] = width_columns(file("bench" + s + ".csv"));
  }
  if (failed_runs) return {false, std::to_string(failed_runs) + " CLI invocations failed"};
  for (const auto& [name, text] : runs[0]) {
    ++compared;
    if (runs[1][name] != text || text.empty()) ++differing;
  }
  return {differing == 0, std::to_string(compared) + " artifacts compared, " +
                              std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example width", worked_example},
      {2, "matrix fidelity", matrix_fidelity},
      {3, "trace fidelity", trace_fidelity},
      {4, "oracle equivalence suite", oracle_suite},
      {5, "QAOA reducibility", reducibility},
      {6, "runtime scaling fit (soft)", scaling},
      {7, "CLI determinism", determinism},
      {8, "baseline width comparisons",
       [] {
         return Outcome{true,
                        "QNET and Qiskit baselines are out of scope; substituted by the "
                        "criterion 4 gap report",
                        false, "SUBSTITUTED"};
       }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::string status = !o.label.empty() ? o.label : (o.pass ? "PASS" : "FAIL");
    std::printf("criterion %d %-28s %s  %s\n", c.id, c.name, status.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (o.gated && !o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
