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
#include "outlierseq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "outlierseq/errors.hpp"
#include "outlierseq/gl_tests.hpp"

namespace outlierseq {

namespace {

using Group = DivergencePair::Group;

void require_shared_alphabet(std::span<const Pmf> a, std::span<const Pmf> b, const char* what) {
  if (a.empty() || b.empty()) throw InvalidInput(std::string(what) + ": empty list");
  const std::size_t k = a.front().size();
  for (const Pmf& p : a) {
    if (p.size() != k) throw InvalidInput(std::string(what) + ": alphabet mismatch");
  }
  for (const Pmf& p : b) {
    if (p.size() != k) throw InvalidInput(std::string(what) + ": alphabet mismatch");
  }
}

DivergencePair max_within(std::span<const Pmf> group, Group tag) {
  DivergencePair best{tag, 0, tag, 0, -1.0};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      const double d = kl(group[i], group[j]);
      if (d > best.value) best = {tag, i, tag, j, d};
    }
  }
  return best;
}

Pmf rational_pmf(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<double> probs;
  for (auto [num, den] : fractions) probs.push_back(static_cast<double>(num) / den);
  return Pmf(std::move(probs));
}

Pmf binary(std::size_t k, std::size_t resolution) {
  const double n = static_cast<double>(resolution);
  return Pmf({static_cast<double>(k) / n, static_cast<double>(resolution - k) / n});
}

std::size_t grid_resolution(double grid_step) {
  if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
    throw InvalidInput("grid step must be positive");
  }
  const double inverse = std::round(1.0 / grid_step);
  if (inverse < 1.0 || inverse > 1e6) throw InvalidInput("grid step out of range");
  return static_cast<std::size_t>(inverse);
}

}  // namespace

ClusterConditionReport check_cluster_condition(std::span<const Pmf> typicals,
                                               std::span<const Pmf> outliers) {
  require_shared_alphabet(typicals, outliers, "check_cluster_condition");
  ClusterConditionReport report;
  report.max_intra_outlier = max_within(outliers, Group::kOutlier);
  report.max_intra_typical = max_within(typicals, Group::kTypical);

  DivergencePair cross{Group::kOutlier, 0, Group::kTypical, 0, kInfinity};
  bool first = true;
  for (std::size_t i = 0; i < outliers.size(); ++i) {
    for (std::size_t j = 0; j < typicals.size(); ++j) {
      const double forward = kl(outliers[i], typicals[j]);
      if (first || forward < cross.value) cross = {Group::kOutlier, i, Group::kTypical, j, forward};
      first = false;
      const double backward = kl(typicals[j], outliers[i]);
      if (backward < cross.value) cross = {Group::kTypical, j, Group::kOutlier, i, backward};
    }
  }
  report.min_cross = cross;

  if (!(report.max_intra_outlier.value < cross.value)) {
    report.violation = report.max_intra_outlier;
  } else if (!(report.max_intra_typical.value < cross.value)) {
    report.violation = report.max_intra_typical;
  }
  report.holds = !report.violation.has_value();
  return report;
}

std::vector<Pmf> example1_distributions(std::size_t m) {
  if (m < 7) throw InvalidInput("example1: need M >= 7 so that {0,1,2} is below M/2");
  std::vector<Pmf> out;
  out.reserve(m);
  out.push_back(rational_pmf({{1, 4}, {1, 2}, {1, 4}}));
  out.push_back(rational_pmf({{1, 5}, {7, 15}, {1, 3}}));
  out.push_back(rational_pmf({{1, 3}, {1, 3}, {1, 3}}));
  const Pmf bulk = rational_pmf({{247, 500}, {32, 125}, {1, 4}});
  for (std::size_t i = 3; i < m; ++i) out.push_back(bulk);
  return out;
}

Example1Certificate example1_certificate_with(const Pmf& lone_typical, std::size_t m) {
  auto dists = example1_distributions(m);
  if (lone_typical.size() != dists.front().size()) {
    throw InvalidInput("example1: replacement must be on a 3-symbol alphabet");
  }
  dists[2] = lone_typical;

  Example1Certificate cert;
  cert.m = m;
  const std::vector<Pmf> outliers{dists[0], dists[1]};
  const std::vector<Pmf> typicals{dists[2], dists[3]};
  cert.condition = check_cluster_condition(typicals, outliers);
  cert.total_true_split = gl_cost_unknown(dists, OutlierSet({0, 1}, m)).total;
  cert.total_alternative_split = gl_cost_unknown(dists, OutlierSet({0, 1, 2}, m)).total;
  cert.difference = cert.total_true_split - cert.total_alternative_split;
  cert.alternative_not_worse = cert.total_alternative_split <= cert.total_true_split;
  return cert;
}

Example1Certificate example1_certificate(std::size_t m) {
  return example1_certificate_with(example1_distributions(m)[2], m);
}

Pmf geometric_mean(const Pmf& p1, const Pmf& p2) {
  if (p1.size() != p2.size()) throw InvalidInput("geometric_mean: alphabet mismatch");
  std::vector<double> g(p1.size());
  double sum = 0.0;
  for (std::size_t y = 0; y < g.size(); ++y) {
    g[y] = std::sqrt(p1[y] * p2[y]);
    sum += g[y];
  }
  if (sum == 0.0) throw InvalidInput("geometric_mean: disjoint supports");
  for (double& v : g) v /= sum;
  return Pmf(std::move(g));
}

Lemma2Result lemma2_oracle(const Pmf& p1, const Pmf& p2, double grid_step) {
  if (p1.size() != p2.size()) throw InvalidInput("lemma2_oracle: alphabet mismatch");
  if (p1.size() != 2 && p1.size() != 3) {
    throw InvalidInput("lemma2_oracle: alphabet size must be 2 or 3");
  }
  if (!p1.full_support() || !p2.full_support()) {
    throw InvalidInput("lemma2_oracle: both pmfs need full support");
  }
  if (!(grid_step > 0.0) || grid_step > 0.01) {
    throw InvalidInput("lemma2_oracle: grid step must be in (0, 0.01]");
  }
  const std::size_t n = grid_resolution(grid_step);
  const double nd = static_cast<double>(n);

  double best = kInfinity;
  std::vector<double> best_q;
  auto consider = [&](std::vector<double> q) {
    const Pmf candidate(q);
    const double value = kl(candidate, p1) + kl(candidate, p2);
    if (value < best) {
      best = value;
      best_q = std::move(q);
    }
  };
  if (p1.size() == 2) {
    for (std::size_t i = 0; i <= n; ++i) {
      consider({static_cast<double>(i) / nd, static_cast<double>(n - i) / nd});
    }
  } else {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; i + j <= n; ++j) {
        consider({static_cast<double>(i) / nd, static_cast<double>(j) / nd,
                  static_cast<double>(n - i - j) / nd});
      }
    }
  }
  return Lemma2Result{best, Pmf(std::move(best_q)), 2.0 * bhattacharyya(p1, p2),
                      geometric_mean(p1, p2)};
}

void ExponentProblem::validate() const {
  if (targets.size() != 3 && targets.size() != 4) {
    throw InvalidInput("exponent problem needs 3 or 4 variables");
  }
  for (const Pmf& t : targets) {
    if (t.size() != targets.front().size()) {
      throw InvalidInput("exponent problem targets differ in alphabet");
    }
  }
  for (const auto& c : constraints) {
    const std::size_t j = targets.size();
    if (c.lhs_from >= j || c.lhs_to >= j || c.rhs_from >= j || c.rhs_to >= j) {
      throw InvalidInput("exponent constraint references a missing variable");
    }
  }
}

double default_exponent_step(std::size_t variables) {
  return variables >= 4 ? 1.0 / 64.0 : 1.0 / 200.0;
}

ExponentEstimate estimate_exponent(const ExponentProblem& problem, double grid_step) {
  problem.validate();
  if (problem.targets.front().size() != 2) {
    std::ostringstream msg;
    msg << "exponent estimation supports only binary alphabets (|Y| = 2), got |Y| = "
        << problem.targets.front().size();
    throw UnsupportedInput(msg.str());
  }
  const std::size_t n = grid_resolution(grid_step);
  const std::size_t points = n + 1;
  const std::size_t vars = problem.targets.size();

  std::vector<Pmf> grid;
  grid.reserve(points);
  for (std::size_t k = 0; k < points; ++k) grid.push_back(binary(k, n));

  // divergence[a * points + b] = D(grid[a] || grid[b])
  std::vector<double> divergence(points * points);
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = 0; b < points; ++b) divergence[a * points + b] = kl(grid[a], grid[b]);
  }
  std::vector<std::vector<double>> to_target(vars, std::vector<double>(points));
  for (std::size_t j = 0; j < vars; ++j) {
    for (std::size_t k = 0; k < points; ++k) to_target[j][k] = kl(grid[k], problem.targets[j]);
  }

  ExponentEstimate out;
  out.grid_step = 1.0 / static_cast<double>(n);
  std::vector<std::size_t> at(vars, 0);
  std::vector<std::size_t> best_at;
  while (true) {
    bool feasible = true;
    for (const auto& c : problem.constraints) {
      const double lhs = divergence[at[c.lhs_from] * points + at[c.lhs_to]];
      const double rhs = divergence[at[c.rhs_from] * points + at[c.rhs_to]];
      if (!(lhs <= rhs)) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      double value = 0.0;
      for (std::size_t j = 0; j < vars; ++j) value += to_target[j][at[j]];
      if (value < out.value) {
        out.value = value;
        best_at = at;
      }
    }
    std::size_t pos = vars;
    while (pos > 0 && ++at[pos - 1] == points) {
      at[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  for (std::size_t k : best_at) out.minimizer.push_back(grid[k]);
  return out;
}

ExponentProblem exponent_preset(const std::string& name, const Pmf& pi, const Pmf& mu,
                                const std::optional<Pmf>& pi_alt,
                                const std::optional<Pmf>& mu_alt) {
  using R = DivergenceConstraint::Relation;
  const Pmf& pi2 = pi_alt ? *pi_alt : pi;
  const Pmf& mu2 = mu_alt ? *mu_alt : mu;
  ExponentProblem p;
  if (name == "C1") {
    // D(q1||q2) <= D(q3||q2)
    p.targets = {mu, pi, pi};
    p.constraints = {{0, 1, R::kLessEqual, 2, 1}};
  } else if (name == "C2") {
    // D(q1||q3) < D(q4||q3) < D(q2||q3)
    p.targets = {pi, pi, mu, mu};
    p.constraints = {{0, 2, R::kLess, 3, 2}, {3, 2, R::kLess, 1, 2}};
  } else if (name == "C3" || name == "C7") {
    // D(q1||q2) > D(q3||q2)
    p.targets = {pi, name == "C7" ? pi2 : pi, mu};
    p.constraints = {{2, 1, R::kLess, 0, 1}};
  } else if (name == "C4" || name == "C8") {
    p.targets = {mu, name == "C8" ? mu2 : mu, pi};
    p.constraints = {{2, 1, R::kLess, 0, 1}};
  } else if (name == "C5" || name == "C9") {
    // D(q1||q2) > D(q1||q3)
    p.targets = {pi, name == "C9" ? pi2 : pi, mu};
    p.constraints = {{0, 2, R::kLess, 0, 1}};
  } else if (name == "C6" || name == "C10") {
    p.targets = {mu, name == "C10" ? mu2 : mu, pi};
    p.constraints = {{0, 2, R::kLess, 0, 1}};
  } else {
    throw InvalidInput("unknown constraint set '" + name + "' (expected C1..C10)");
  }
  p.validate();
  return p;
}

double bhattacharyya_bound(const Pmf& typical, std::span<const Pmf> outliers) {
  if (outliers.empty()) throw InvalidInput("bhattacharyya_bound: no outliers");
  double bound = kInfinity;
  for (const Pmf& mu : outliers) bound = std::min(bound, 2.0 * bhattacharyya(mu, typical));
  return bound;
}

}  // namespace outlierseq
