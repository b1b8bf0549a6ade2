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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gidnet/circuit.hpp"
#include "gidnet/reuse.hpp"

namespace gidnet {

enum class Family { Grcs, Qaoa };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct BenchRecord {
  std::string circuit_id;
  Family family = Family::Grcs;
  std::size_t n = 0;
  std::size_t depth_or_p = 0;
  std::uint64_t seed = 0;  // instance generation seed
  std::size_t original_width = 0;
  std::size_t runs = 0;
  std::size_t best_width = 0;
  std::vector<std::size_t> widths;     // one per run, in run order
  std::vector<double> runtimes_s;      // one per timed compilation
  double mean_runtime_s = 0;
  double median_runtime_s = 0;
};

struct BenchOptions {
  Family family = Family::Grcs;
  std::vector<std::size_t> sizes;
  std::size_t depth_or_p = 11;
  std::size_t repeats = 10;
  std::size_t time_reps = 7;
  std::uint64_t seed = 0;
  std::optional<std::size_t> iterations;  // nullopt = auto
  int threads = 1;
};

/// The benchmark circuit for one size; deterministic in (options, n).
Circuit bench_circuit(const BenchOptions& options, std::size_t n, std::uint64_t instance_seed);
std::uint64_t instance_seed(const BenchOptions& options, std::size_t n);

/// For each size: `repeats` searches with distinct derived seeds (best width
/// kept), then `time_reps` timed compilations (search plus rewrite) run one
/// at a time.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Header: family,n,depth_or_p,seed,orig_width,best_width,mean_runtime_s,median_runtime_s
void write_csv(std::ostream& os, std::span<const BenchRecord> records);
/// Reads what write_csv writes; columns located by header name.
std::vector<BenchRecord> read_csv(std::istream& is);
std::string records_json(std::span<const BenchRecord> records);

struct FitReport {
  std::size_t degree = 0;
  std::vector<double> coefficients;  // ascending powers of n
  double r_squared = 0;
  double f_statistic = 0;  // +inf on a perfect fit
  std::size_t points = 0;
  std::string warning;

  double predict(double x) const;
};

/// Least-squares polynomial of the given degree (2, 3 or 5) through the
/// points. R^2 = 1 - SS_res / SS_tot (0 with a warning when SS_tot is 0);
/// F = (SS_reg / degree) / (SS_res / (N - degree - 1)). Throws
/// std::invalid_argument with fewer than degree + 2 distinct x values and
/// std::runtime_error on a rank-deficient design.
FitReport fit_polynomial(std::span<const double> xs, std::span<const double> ys,
                         std::size_t degree);
/// Fits mean runtime against n.
FitReport fit_polynomial(std::span<const BenchRecord> records, std::size_t degree);

std::string fit_json(const FitReport& report);

}  // namespace gidnet
