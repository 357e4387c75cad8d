// Copyright 2026 The outlierseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
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
#include <string>
#include <utility>
#include <vector>

#include "outlierseq/cluster_tests.hpp"
#include "outlierseq/gl_tests.hpp"
#include "outlierseq/scenario.hpp"

namespace outlierseq {

struct SimConfig {
  explicit SimConfig(Scenario s) : scenario(std::move(s)) {}

  Scenario scenario;
  std::vector<std::size_t> n_grid;
  std::size_t trials = 2000;
  std::uint64_t master_seed = 0;
  std::vector<TestKind> tests;
  /// T handed to known-T tests; defaults to the size of the true set.
  std::optional<std::size_t> t_known;
  /// Draw the probe index per trial from the trial engine; otherwise use fixed_probe.
  bool random_probe = true;
  std::size_t fixed_probe = 0;
  std::size_t max_iterations = kDefaultIterationCap;
  std::size_t workers = 1;
  GlOptions gl;
  /// Keep per-trial outcomes in SimResult::trials.
  bool keep_trials = false;

  /// Throws ConfigError describing the first offending field.
  void validate() const;
  std::size_t effective_t() const;
};

/// Aggregate for one (test, n) cell.
struct SimRecord {
  std::string test_name;
  ScenarioKind scenario_kind = ScenarioKind::kIdenticalBoth;
  std::size_t m = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  double avg_iterations = 0.0;
  std::uint64_t seed = 0;
  /// Summed test time across trials; excluded from equality.
  double wall_time_seconds = 0.0;
  /// Trials whose cost trace increased somewhere.
  std::size_t cost_trace_violations = 0;
  /// Until-convergence runs that stopped at the iteration cap.
  std::size_t iteration_cap_hits = 0;

  friend bool operator==(const SimRecord& a, const SimRecord& b);
};

struct TrialTestResult {
  std::vector<std::size_t> detected;
  bool no_outliers_found = false;
  bool correct = false;
  std::size_t iterations = 0;
  std::vector<double> cost_trace;
  bool converged = false;
  bool hit_iteration_cap = false;
};

struct TrialDetail {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::size_t probe = 0;
  /// Parallel to SimConfig::tests.
  std::vector<TrialTestResult> results;
};

struct SimResult {
  /// Ordered by n, then by the order of SimConfig::tests.
  std::vector<SimRecord> records;
  std::vector<TrialDetail> trials;
};

/// Runs every selected test on `trials` independent samples per n. Trial k at
/// length n uses trial_engine(master_seed, n, k), so output does not depend on
/// the worker count.
SimResult run_sim(const SimConfig& config);

/// Runs one test on one set of empiricals.
TrialTestResult run_test(TestKind kind, std::span<const Pmf> gammas, std::size_t t,
                         std::size_t probe, std::size_t max_iterations, const GlOptions& gl);

bool is_nonincreasing(std::span<const double> trace);

struct ConvergencePoint {
  std::size_t x;
  double avg_iterations;
};

/// Average delta3 (until convergence) iterations per n of `config.n_grid`.
std::vector<ConvergencePoint> convergence_profile(const SimConfig& config);

/// Average delta3 iterations as M varies with T = M / t_divisor and fixed n.
/// Every M shares the distributions drawn from scenario_engine(master_seed).
struct MSweepConfig {
  ScenarioSpec base;
  std::vector<std::size_t> m_grid;
  std::size_t t_divisor = 5;
  std::size_t n = 400;
  std::size_t trials = 300;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  std::vector<TestKind> tests{TestKind::kDelta3};
  std::size_t max_iterations = kDefaultIterationCap;
};

std::vector<SimRecord> run_m_sweep(const MSweepConfig& config);
std::vector<ConvergencePoint> convergence_profile_over_m(const MSweepConfig& config);

/// Least-squares fit of ln(error_rate) against n over records with errors > 0.
struct LogErrorTrend {
  std::size_t points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LogErrorTrend log_error_trend(std::span<const SimRecord> records);

}  // namespace outlierseq
