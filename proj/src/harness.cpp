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

#include "gidnet/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gidnet/benchgen.hpp"
#include "gidnet/rewrite.hpp"
#include "gidnet/rng.hpp"
#include "json.hpp"

namespace gidnet {

std::string family_name(Family f) { return f == Family::Grcs ? "grcs" : "qaoa"; }

Family family_from_name(const std::string& name) {
  if (name == "grcs") return Family::Grcs;
  if (name == "qaoa") return Family::Qaoa;
  throw std::invalid_argument("unknown benchmark family '" + name + "'");
}

std::uint64_t instance_seed(const BenchOptions& options, std::size_t n) {
  return derive_seed(options.seed, n);
}

Circuit bench_circuit(const BenchOptions& options, std::size_t n, std::uint64_t seed) {
  if (options.family == Family::Grcs) {
    auto [rows, cols] = lattice_shape(n);
    return gen_grcs({rows, cols, options.depth_or_p, seed});
  }
  return gen_qaoa(QaoaSpec::with_default_angles(gen_u3r(n, seed), options.depth_or_p));
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.repeats == 0) throw std::invalid_argument("run_bench: repeats must be positive");
  std::vector<BenchRecord> records;
  for (std::size_t n : options.sizes) {
    BenchRecord rec;
    rec.family = options.family;
    rec.n = n;
    rec.depth_or_p = options.depth_or_p;
    rec.seed = instance_seed(options, n);
    const Circuit circuit = bench_circuit(options, n, rec.seed);
    rec.circuit_id = family_name(options.family) + "-n" + std::to_string(n) + "-" +
                     (options.family == Family::Grcs ? "d" : "p") +
                     std::to_string(options.depth_or_p);
    rec.original_width = circuit.num_qubits();
    rec.runs = options.repeats;

    SearchConfig config;
    config.iterations = options.iterations;
    config.threads = options.threads;
    rec.best_width = rec.original_width;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      config.seed = derive_seed(rec.seed, r + 1);
      const auto result = gidnet(circuit, config);
      rec.widths.push_back(result.solution.width());
      rec.best_width = std::min(rec.best_width, result.solution.width());
    }

    config.seed = derive_seed(rec.seed, 0);
    for (std::size_t r = 0; r < options.time_reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = gidnet(circuit, config);
      const auto dynamic = rewrite_dynamic(circuit, result.solution);
      const auto stop = std::chrono::steady_clock::now();
      if (dynamic.width() != result.solution.width())
        throw std::logic_error("run_bench: rewritten width disagrees with solution");
      rec.runtimes_s.push_back(std::chrono::duration<double>(stop - start).count());
    }
    if (!rec.runtimes_s.empty()) {
      rec.mean_runtime_s = std::accumulate(rec.runtimes_s.begin(), rec.runtimes_s.end(), 0.0) /
                           static_cast<double>(rec.runtimes_s.size());
      rec.median_runtime_s = median(rec.runtimes_s);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << "family,n,depth_or_p,seed,orig_width,best_width,mean_runtime_s,median_runtime_s\n";
  for (const auto& r : records) {
    os << family_name(r.family) << ',' << r.n << ',' << r.depth_or_p << ',' << r.seed << ','
       << r.original_width << ',' << r.best_width << ',' << std::setprecision(9)
       << r.mean_runtime_s << ',' << r.median_runtime_s << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& is) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty input");
  const auto header = split(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"family", "n", "depth_or_p", "seed", "orig_width", "best_width",
                           "mean_runtime_s", "median_runtime_s"})
    if (!col.contains(need)) throw std::runtime_error(std::string("read_csv: missing column ") + need);

  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw std::runtime_error("read_csv: line " + std::to_string(line_no) + " has " +
                               std::to_string(cells.size()) + " cells");
    try {
      BenchRecord r;
      r.family = family_from_name(cells[col["family"]]);
      r.n = std::stoull(cells[col["n"]]);
      r.depth_or_p = std::stoull(cells[col["depth_or_p"]]);
      r.seed = std::stoull(cells[col["seed"]]);
      r.original_width = std::stoull(cells[col["orig_width"]]);
      r.best_width = std::stoull(cells[col["best_width"]]);
      r.mean_runtime_s = std::stod(cells[col["mean_runtime_s"]]);
      r.median_runtime_s = std::stod(cells[col["median_runtime_s"]]);
      records.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw std::runtime_error("read_csv: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::string records_json(std::span<const BenchRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"circuit_id", r.circuit_id},
                   {"family", family_name(r.family)},
                   {"n", r.n},
                   {"depth_or_p", r.depth_or_p},
                   {"seed", r.seed},
                   {"orig_width", r.original_width},
                   {"runs", r.runs},
                   {"best_width", r.best_width},
                   {"widths", r.widths},
                   {"runtimes_s", r.runtimes_s},
                   {"mean_runtime_s", r.mean_runtime_s},
                   {"median_runtime_s", r.median_runtime_s}});
  }
  return arr.dump(2);
}

double FitReport::predict(double x) const {
  double y = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) y = y * x + coefficients[k];
  return y;
}

FitReport fit_polynomial(std::span<const double> xs, std::span<const double> ys,
                         std::size_t degree) {
  if (degree != 2 && degree != 3 && degree != 5)
    throw std::invalid_argument("fit_polynomial: degree must be 2, 3 or 5");
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_polynomial: length mismatch");
  const std::set<double> distinct(xs.begin(), xs.end());
  if (distinct.size() < degree + 2)
    throw std::invalid_argument("insufficient sizes: degree " + std::to_string(degree) +
                                " needs at least " + std::to_string(degree + 2) +
                                " distinct sizes, got " + std::to_string(distinct.size()));

  const auto rows = static_cast<Eigen::Index>(xs.size());
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  // Powers of x / max|x| keep the design well conditioned.
  double scale = 0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  if (scale == 0) scale = 1;
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double u = xs[static_cast<std::size_t>(i)] / scale;
    double power = 1;
    for (Eigen::Index k = 0; k < cols; ++k, power *= u) design(i, k) = power;
    y(i) = ys[static_cast<std::size_t>(i)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < cols) throw std::runtime_error("fit_polynomial: rank-deficient design matrix");
  const Eigen::VectorXd beta = qr.solve(y);

  FitReport report;
  report.degree = degree;
  report.points = xs.size();
  for (Eigen::Index k = 0; k < cols; ++k)
    report.coefficients.push_back(beta(k) / std::pow(scale, static_cast<double>(k)));

  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  const double ss_res = (y - design * beta).squaredNorm();
  if (ss_tot == 0) {
    report.r_squared = 0;
    report.f_statistic = 0;
    report.warning = "constant response: R^2 reported as 0";
    return report;
  }
  report.r_squared = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  const double ss_reg = std::max(0.0, ss_tot - ss_res);
  const double dof = static_cast<double>(xs.size() - degree - 1);
  report.f_statistic = ss_res == 0 ? std::numeric_limits<double>::infinity()
                                   : (ss_reg / static_cast<double>(degree)) / (ss_res / dof);
  return report;
}

FitReport fit_polynomial(std::span<const BenchRecord> records, std::size_t degree) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    xs.push_back(static_cast<double>(r.n));
    ys.push_back(r.mean_runtime_s);
  }
  return fit_polynomial(xs, ys, degree);
}

std::string fit_json(const FitReport& report) {
  nlohmann::json j;
  j["degree"] = report.degree;
  j["coefficients"] = report.coefficients;
  j["r_squared"] = report.r_squared;
  if (std::isfinite(report.f_statistic))
    j["f_statistic"] = report.f_statistic;
  else
    j["f_statistic"] = "inf";
  j["points"] = report.points;
  if (!report.warning.empty()) j["warning"] = report.warning;
  return j.dump();
}

}  // namespace gidnet
