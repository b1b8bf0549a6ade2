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

// gidnet: qubit-reuse compiler command line.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 circuit parse error,
// 3 internal invariant breach, 4 equivalence check failed.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gidnet/benchgen.hpp"
#include "gidnet/circuit.hpp"
#include "gidnet/errors.hpp"
#include "gidnet/harness.hpp"
#include "gidnet/matrices.hpp"
#include "gidnet/reuse.hpp"
#include "gidnet/rewrite.hpp"
#include "gidnet/verify.hpp"
#include "json.hpp"

namespace {

using namespace gidnet;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kInvariant = 3, kNotEquivalent = 4 };

struct Globals {
  std::string seed = "default";
  std::string iterations = "auto";
  std::string tie_break = "random";
  int threads = 1;
  bool quiet = false;
  bool json = false;
};

struct Failure {
  int code;
  std::string message;
};

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "default") return SearchConfig{}.seed;
  if (text == "random") {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{kUsage, "--seed expects an unsigned integer or 'random', got '" + text + "'"};
}

SearchConfig search_config(const Globals& g) {
  SearchConfig config;
  config.seed = resolve_seed(g.seed);
  if (g.iterations != "auto") {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(g.iterations, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != g.iterations.size() || v == 0)
      throw Failure{kUsage, "--iterations expects a positive integer or 'auto'"};
    config.iterations = v;
  }
  if (g.tie_break == "random")
    config.tie_break = TieBreak::Random;
  else if (g.tie_break == "lowest" || g.tie_break == "lowest-index")
    config.tie_break = TieBreak::LowestIndex;
  else
    throw Failure{kUsage, "--tie-break expects 'random' or 'lowest-index'"};
  if (g.threads < 0) throw Failure{kUsage, "--threads must be >= 0"};
  config.threads = g.threads;
  return config;
}

Circuit load_circuit(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw Failure{kUsage, e.what()};
  }
  try {
    return parse_circuit(text);
  } catch (const ParseError& e) {
    throw Failure{kParse, path + ": " + e.what()};
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  try {
    write_text_file(path, text);
  } catch (const std::exception& e) {
    throw Failure{kUsage, e.what()};
  }
}

std::string sibling_path(const std::string& input, const std::string& suffix) {
  std::filesystem::path p(input);
  p.replace_extension();
  return p.string() + suffix;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kUsage, "--sizes expects comma-separated integers, got '" + text + "'"};
    }
  }
  if (sizes.empty()) throw Failure{kUsage, "--sizes is empty"};
  return sizes;
}

// compile

struct CompileArgs {
  std::string input;
  std::string output;
  std::string solution;
  bool verify = false;
  bool dump = false;
};

int cmd_compile(const Globals& g, const CompileArgs& a) {
  const SearchConfig config = search_config(g);
  const Circuit circuit = load_circuit(a.input);
  if (circuit.form() != CircuitForm::Static)
    throw Failure{kParse, a.input + ": input must be a static circuit (reset after use found)"};

  if (a.dump) {
    const auto dag = build_dag(circuit);
    const auto b = biadjacency(dag, config.threads);
    dump_matrices(std::cout, b, candidate_from_biadjacency(b));
  }

  const SearchResult result = gidnet::gidnet(circuit, config);
  const ValidationReport report = validate_solution(circuit, result.solution);
  if (!report.ok) throw Failure{kInvariant, "invalid solution: " + report.message};
  const DynamicCircuit dynamic = rewrite_dynamic(circuit, result.solution);

  write_output(a.output.empty() ? sibling_path(a.input, ".dynamic.qasm") : a.output,
               serialize_dynamic(dynamic));
  write_output(a.solution.empty() ? sibling_path(a.input, ".solution.json") : a.solution,
               solution_json(result) + "\n");

  std::optional<EquivalenceResult> eq;
  if (a.verify) {
    try {
      eq = equivalence_check(circuit, dynamic);
    } catch (const SizeLimitError& e) {
      throw Failure{kUsage, std::string("--verify: ") + e.what()};
    }
  }

  if (g.json) {
    nlohmann::json j = nlohmann::json::parse(solution_json(result));
    if (eq) j["verify"] = {{"pass", eq->pass}, {"tvd", eq->tvd}, {"branches", eq->branches}};
    std::cout << j.dump() << '\n';
  } else if (!g.quiet) {
    std::cout << "width " << result.original_width << " -> " << result.solution.width() << '\n';
    if (result.irreducible) std::cout << "irreducible\n";
    if (eq) std::cout << "verify " << (eq->pass ? "pass" : "FAIL") << " tvd " << eq->tvd << '\n';
  }
  if (eq && !eq->pass) return kNotEquivalent;
  return kOk;
}

// gen

struct GenGrcsArgs {
  std::size_t rows = 4, cols = 4, depth = 11;
  std::string output;
};

struct GenQaoaArgs {
  std::size_t n = 8, p = 1;
  double gamma = kDefaultGamma, beta = kDefaultBeta;
  std::string output;
  std::string graph_output;
};

int cmd_gen_grcs(const Globals& g, const GenGrcsArgs& a) {
  Circuit c;
  try {
    c = gen_grcs({a.rows, a.cols, a.depth, resolve_seed(g.seed)});
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  write_output(a.output, serialize_circuit(c));
  return kOk;
}

int cmd_gen_qaoa(const Globals& g, const GenQaoaArgs& a) {
  Circuit c;
  U3RGraph graph;
  try {
    graph = gen_u3r(a.n, resolve_seed(g.seed));
    QaoaSpec spec{graph, a.p, std::vector<double>(a.p, a.gamma), std::vector<double>(a.p, a.beta)};
    c = gen_qaoa(spec);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  write_output(a.output, serialize_circuit(c));
  if (!a.graph_output.empty()) write_output(a.graph_output, edge_list_text(graph));
  return kOk;
}

// bench

struct BenchArgs {
  std::string family = "grcs";
  std::string sizes;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> p;
  std::size_t repeats = 10;
  std::size_t time_reps = 7;
  std::string out = "-";
  std::string format = "csv";
};

int cmd_bench(const Globals& g, const BenchArgs& a) {
  const SearchConfig config = search_config(g);
  BenchOptions options;
  try {
    options.family = family_from_name(a.family);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  options.sizes = parse_sizes(a.sizes);
  if (options.family == Family::Grcs) {
    if (a.p) throw Failure{kUsage, "--p applies to --family qaoa"};
    options.depth_or_p = a.depth.value_or(11);
  } else {
    if (a.depth) throw Failure{kUsage, "--depth applies to --family grcs"};
    options.depth_or_p = a.p.value_or(1);
  }
  if (a.repeats == 0) throw Failure{kUsage, "--repeats must be positive"};
  if (a.format != "csv" && a.format != "json") throw Failure{kUsage, "--format expects csv or json"};
  options.repeats = a.repeats;
  options.time_reps = a.time_reps;
  options.seed = config.seed;
  options.iterations = config.iterations;
  options.threads = config.threads;

  std::vector<BenchRecord> records;
  try {
    records = run_bench(options);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  if (!g.quiet) {
    for (const auto& r : records)
      std::cerr << r.circuit_id << ": width " << r.original_width << " -> " << r.best_width
                << ", mean " << r.mean_runtime_s << " s\n";
  }
  if (a.format == "json") {
    write_output(a.out, records_json(records) + "\n");
  } else {
    std::ostringstream os;
    write_csv(os, records);
    write_output(a.out, os.str());
  }
  return kOk;
}

// verify

struct VerifyArgs {
  std::string original;
  std::string rewritten;
  double tol = kDefaultEquivalenceTolerance;
};

int cmd_verify(const Globals&, const VerifyArgs& a) {
  const Circuit original = load_circuit(a.original);
  const Circuit rewritten = load_circuit(a.rewritten);
  EquivalenceResult eq;
  try {
    eq = equivalence_check(original, rewritten, a.tol);
  } catch (const SizeLimitError& e) {
    throw Failure{kUsage, e.what()};
  }
  nlohmann::json j{{"pass", eq.pass}, {"tvd", eq.tvd}, {"branches", eq.branches}};
  std::cout << j.dump() << '\n';
  return eq.pass ? kOk : kNotEquivalent;
}

// fit

struct FitArgs {
  std::size_t degree = 3;
  std::string input;
};

int cmd_fit(const Globals& g, const FitArgs& a) {
  std::vector<BenchRecord> records;
  try {
    std::ifstream in(a.input);
    if (!in) throw std::runtime_error("cannot open " + a.input);
    records = read_csv(in);
  } catch (const std::runtime_error& e) {
    throw Failure{kUsage, e.what()};
  }
  FitReport report;
  try {
    report = fit_polynomial(records, a.degree);
  } catch (const std::exception& e) {
    throw Failure{kUsage, e.what()};
  }
  if (!report.warning.empty() && !g.quiet) std::cerr << "warning: " << report.warning << '\n';
  std::cout << fit_json(report) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gidnet: qubit-reuse compiler for static quantum circuits"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed,
                 "Master seed: unsigned integer, or 'random' for entropy (default: fixed constant)");
  app.add_option("--iterations", g.iterations, "Search iterations: positive integer or 'auto'")
      ->capture_default_str();
  app.add_option("--tie-break", g.tie_break, "Final tie-break rule: random or lowest-index")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads; 0 uses the OpenMP default")
      ->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Suppress informational output");
  app.add_flag("--json", g.json, "Machine-readable output where supported");

  CompileArgs compile;
  auto* c = app.add_subcommand("compile", "Compile a static circuit to a dynamic circuit");
  c->add_option("input", compile.input, "Static circuit file")->required();
  c->add_option("-o,--output", compile.output,
                "Dynamic circuit output (default <input>.dynamic.qasm; '-' for stdout)");
  c->add_option("--solution", compile.solution,
                "Solution JSON output (default <input>.solution.json; '-' for stdout)");
  c->add_flag("--verify", compile.verify, "Check outcome-distribution equivalence");
  c->add_flag("--dump-matrices", compile.dump, "Print the biadjacency and candidate matrices");

  auto* gen = app.add_subcommand("gen", "Generate benchmark circuits");
  gen->require_subcommand(1);
  GenGrcsArgs grcs;
  auto* gg = gen->add_subcommand("grcs", "Lattice random circuit");
  gg->add_option("--rows", grcs.rows, "Lattice rows")->capture_default_str();
  gg->add_option("--cols", grcs.cols, "Lattice columns")->capture_default_str();
  gg->add_option("--depth", grcs.depth, "CZ cycles")->capture_default_str();
  gg->add_option("-o,--output", grcs.output, "Circuit output (default stdout)");
  GenQaoaArgs qaoa;
  auto* gq = gen->add_subcommand("qaoa", "MaxCut QAOA on a random 3-regular graph");
  gq->add_option("--n", qaoa.n, "Vertices (even, >= 4)")->capture_default_str();
  gq->add_option("--p", qaoa.p, "QAOA layers")->capture_default_str();
  gq->add_option("--gamma", qaoa.gamma, "Cost angle for every layer")->capture_default_str();
  gq->add_option("--beta", qaoa.beta, "Mixer angle for every layer")->capture_default_str();
  gq->add_option("-o,--output", qaoa.output, "Circuit output (default stdout)");
  gq->add_option("--graph-out", qaoa.graph_output, "Write the graph as an edge list");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Width and runtime benchmark");
  b->add_option("--family", bench.family, "grcs or qaoa")->capture_default_str();
  b->add_option("--sizes", bench.sizes, "Comma-separated qubit counts")->required();
  b->add_option("--depth", bench.depth, "GRCS cycles (default 11)");
  b->add_option("--p", bench.p, "QAOA layers (default 1)");
  b->add_option("--repeats", bench.repeats, "Searches per instance; best width kept")
      ->capture_default_str();
  b->add_option("--time-reps", bench.time_reps, "Timed compilations per instance")
      ->capture_default_str();
  b->add_option("--out", bench.out, "Output path ('-' for stdout)")->capture_default_str();
  b->add_option("--format", bench.format, "csv or json")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare outcome distributions of two circuits");
  v->add_option("static", verify.original, "Original circuit")->required();
  v->add_option("dynamic", verify.rewritten, "Compiled circuit")->required();
  v->add_option("--tol", verify.tol, "Total variation tolerance")->capture_default_str();

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Polynomial fit of bench runtimes against n");
  f->add_option("--degree", fit.degree, "2, 3 or 5")->capture_default_str();
  f->add_option("--in", fit.input, "Bench CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return cmd_compile(g, compile);
    if (gg->parsed()) return cmd_gen_grcs(g, grcs);
    if (gq->parsed()) return cmd_gen_qaoa(g, qaoa);
    if (b->parsed()) return cmd_bench(g, bench);
    if (v->parsed()) return cmd_verify(g, verify);
    if (f->parsed()) return cmd_fit(g, fit);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const ContractError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
