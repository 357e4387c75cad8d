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
#include "outlierseq/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "outlierseq/errors.hpp"

namespace outlierseq {

namespace {

struct CellTally {
  std::size_t errors = 0;
  std::size_t iterations = 0;
  std::size_t violations = 0;
  std::size_t cap_hits = 0;
  double seconds = 0.0;
};

struct TrialOutput {
  TrialDetail detail;
  std::vector<double> seconds;
  std::vector<bool> cap_hit;
};

bool matches(const std::vector<std::size_t>& detected, const OutlierSet& truth) {
  return std::equal(detected.begin(), detected.end(), truth.indices().begin(),
                    truth.indices().end());
}

TrialOutput run_trial(const SimConfig& config, std::size_t n, std::size_t trial) {
  Engine rng = trial_engine(config.master_seed, n, trial);
  const auto gammas = sample_empiricals(config.scenario, n, rng);
  const std::size_t m = gammas.size();
  std::size_t probe = config.fixed_probe;
  if (config.random_probe) probe = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);

  TrialOutput out;
  out.detail.n = n;
  out.detail.trial = trial;
  out.detail.probe = probe;
  const std::size_t t = config.effective_t();
  for (TestKind kind : config.tests) {
    const auto start = std::chrono::steady_clock::now();
    TrialTestResult r = run_test(kind, gammas, t, probe, config.max_iterations, config.gl);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    r.correct = !r.no_outliers_found && matches(r.detected, config.scenario.true_set);
    out.seconds.push_back(elapsed.count());
    out.cap_hit.push_back(r.hit_iteration_cap);
    out.detail.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace

bool operator==(const SimRecord& a, const SimRecord& b) {
  return a.test_name == b.test_name && a.scenario_kind == b.scenario_kind && a.m == b.m &&
         a.t == b.t && a.n == b.n && a.trials == b.trials && a.errors == b.errors &&
         a.error_rate == b.error_rate && a.avg_iterations == b.avg_iterations &&
         a.seed == b.seed && a.cost_trace_violations == b.cost_trace_violations &&
         a.iteration_cap_hits == b.iteration_cap_hits;
}

std::size_t SimConfig::effective_t() const { return t_known.value_or(scenario.true_set.size()); }

void SimConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw ConfigError(field + ": " + why);
  };
  scenario.validate();
  const std::size_t m = scenario.sequence_count();
  if (trials < 1) fail("trials", "must be at least 1");
  if (n_grid.empty()) fail("n_grid", "must contain at least one sample length");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) fail("n_grid", "sample lengths must be at least 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) fail("n_grid", "must be strictly increasing");
  }
  if (tests.empty()) fail("tests", "select at least one test");
  if (workers < 1) fail("workers", "must be at least 1");
  if (max_iterations < 1) fail("max_iterations", "must be at least 1");
  if (!random_probe && fixed_probe >= m) fail("probe", "fixed probe index out of range");
  const std::size_t t = effective_t();
  for (TestKind kind : tests) {
    if (needs_known_t(kind)) {
      if (t < 1 || 2 * t >= m) fail("t", "known-T tests need 1 <= T < M/2");
      if (kind == TestKind::kGlKnown && !gl.allow_large && binomial(m, t) > gl.max_hypotheses) {
        std::ostringstream msg;
        msg << "gl-known would enumerate C(" << m << "," << t << ") = " << binomial(m, t)
            << " hypotheses per trial, above the cap of " << gl.max_hypotheses;
        fail("tests", msg.str());
      }
    }
    if (kind == TestKind::kGlUnknown && !gl.allow_large && m > gl.max_sequences_unknown) {
      std::ostringstream msg;
      msg << "gl-unknown is refused for M = " << m << " (cap " << gl.max_sequences_unknown
          << " sequences)";
      fail("tests", msg.str());
    }
  }
}

bool is_nonincreasing(std::span<const double> trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i] > trace[i - 1]) return false;
  }
  return true;
}

TrialTestResult run_test(TestKind kind, std::span<const Pmf> gammas, std::size_t t,
                         std::size_t probe, std::size_t max_iterations, const GlOptions& gl) {
  TrialTestResult r;
  auto take = [&r](TestOutcome o) {
    r.detected = std::move(o.detected);
    r.no_outliers_found = o.no_outliers_found;
    r.iterations = o.iterations;
    r.cost_trace = std::move(o.cost_trace);
    r.converged = o.converged;
    r.hit_iteration_cap = o.hit_iteration_cap;
  };
  switch (kind) {
    case TestKind::kGlKnown: {
      const auto s = gl_test_known_t(gammas, t, gl);
      r.detected.assign(s.indices().begin(), s.indices().end());
      break;
    }
    case TestKind::kGlUnknown: {
      const auto s = gl_test_unknown(gammas, gl);
      r.detected.assign(s.indices().begin(), s.indices().end());
      break;
    }
    case TestKind::kDelta2:
      take(delta2(gammas, t, StopRule::until_convergence(max_iterations), probe));
      break;
    case TestKind::kDelta2OneStep:
      take(delta2(gammas, t, StopRule::fixed(1), probe));
      break;
    case TestKind::kDelta3:
      take(delta3(gammas, StopRule::until_convergence(max_iterations), probe));
      break;
    case TestKind::kDelta3OneStep:
      take(delta3(gammas, StopRule::fixed(1), probe));
      break;
  }
  return r;
}

SimResult run_sim(const SimConfig& config) {
  config.validate();
  const std::size_t tests = config.tests.size();
  const std::size_t total = config.n_grid.size() * config.trials;

  std::vector<TrialOutput> outputs(total);
  auto work = [&](std::size_t worker) {
    for (std::size_t job = worker; job < total; job += config.workers) {
      const std::size_t n = config.n_grid[job / config.trials];
      outputs[job] = run_trial(config, n, job % config.trials);
    }
  };
  if (config.workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < config.workers; ++w) pool.emplace_back(work, w);
  }

  SimResult result;
  for (std::size_t g = 0; g < config.n_grid.size(); ++g) {
    std::vector<CellTally> cells(tests);
    for (std::size_t k = 0; k < config.trials; ++k) {
      TrialOutput& out = outputs[g * config.trials + k];
      for (std::size_t i = 0; i < tests; ++i) {
        const TrialTestResult& r = out.detail.results[i];
        cells[i].errors += r.correct ? 0 : 1;
        cells[i].iterations += r.iterations;
        cells[i].violations += is_nonincreasing(r.cost_trace) ? 0 : 1;
        cells[i].cap_hits += out.cap_hit[i] ? 1 : 0;
        cells[i].seconds += out.seconds[i];
      }
      if (config.keep_trials) result.trials.push_back(std::move(out.detail));
    }
    for (std::size_t i = 0; i < tests; ++i) {
      SimRecord rec;
      rec.test_name = to_string(config.tests[i]);
      rec.scenario_kind = config.scenario.kind;
      rec.m = config.scenario.sequence_count();
      rec.t = needs_known_t(config.tests[i]) ? config.effective_t() : config.scenario.true_set.size();
      rec.n = config.n_grid[g];
      rec.trials = config.trials;
      rec.errors = cells[i].errors;
      rec.error_rate = static_cast<double>(rec.errors) / static_cast<double>(rec.trials);
      rec.avg_iterations =
          static_cast<double>(cells[i].iterations) / static_cast<double>(rec.trials);
      rec.seed = config.master_seed;
      rec.wall_time_seconds = cells[i].seconds;
      rec.cost_trace_violations = cells[i].violations;
      rec.iteration_cap_hits = cells[i].cap_hits;
      result.records.push_back(std::move(rec));
    }
  }
  return result;
}

std::vector<ConvergencePoint> convergence_profile(const SimConfig& config) {
  SimConfig c = config;
  c.tests = {TestKind::kDelta3};
  c.keep_trials = false;
  const auto records = run_sim(c).records;
  std::vector<ConvergencePoint> out;
  for (const auto& r : records) out.push_back({r.n, r.avg_iterations});
  return out;
}

std::vector<SimRecord> run_m_sweep(const MSweepConfig& config) {
  if (config.m_grid.empty()) throw ConfigError("m_grid: must contain at least one M");
  if (config.t_divisor < 3) throw ConfigError("t_divisor: must be at least 3 so that T < M/2");
  std::vector<SimRecord> out;
  for (std::size_t i = 0; i < config.m_grid.size(); ++i) {
    if (i > 0 && config.m_grid[i] <= config.m_grid[i - 1]) {
      throw ConfigError("m_grid: must be strictly increasing");
    }
    ScenarioSpec spec = config.base;
    spec.m = config.m_grid[i];
    spec.t = std::max<std::size_t>(1, spec.m / config.t_divisor);
    Engine rng = scenario_engine(config.master_seed);
    SimConfig sim{build_scenario(spec, rng)};
    sim.n_grid = {config.n};
    sim.trials = config.trials;
    sim.master_seed = config.master_seed;
    sim.tests = config.tests;
    sim.workers = config.workers;
    sim.max_iterations = config.max_iterations;
    auto records = run_sim(sim).records;
    out.insert(out.end(), records.begin(), records.end());
  }
  return out;
}

std::vector<ConvergencePoint> convergence_profile_over_m(const MSweepConfig& config) {
  MSweepConfig c = config;
  c.tests = {TestKind::kDelta3};
  std::vector<ConvergencePoint> out;
  for (const auto& r : run_m_sweep(c)) out.push_back({r.m, r.avg_iterations});
  return out;
}

LogErrorTrend log_error_trend(std::span<const SimRecord> records) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records) {
    if (r.errors > 0) pts.emplace_back(static_cast<double>(r.n), std::log(r.error_rate));
  }
  LogErrorTrend out;
  out.points = pts.size();
  if (pts.size() < 2) return out;
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) return out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return out;
}

}  // namespace outlierseq
