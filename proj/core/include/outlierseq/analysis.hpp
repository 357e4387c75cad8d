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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "outlierseq/pmf.hpp"

namespace outlierseq {

// ---------------------------------------------------------------------------
// Clustering condition
// ---------------------------------------------------------------------------

/// One KL evaluation D(from || to) between members of the two lists.
struct DivergencePair {
  enum class Group { kTypical, kOutlier };
  Group from_group;
  std::size_t from;
  Group to_group;
  std::size_t to;
  double value;
};

/// Verdict of the two-cluster separation condition: every intra-cluster
/// divergence (within typicals, within outliers) is strictly below every
/// cross divergence taken in both orientations.
struct ClusterConditionReport {
  bool holds = false;
  DivergencePair max_intra_outlier;
  DivergencePair max_intra_typical;
  DivergencePair min_cross;
  /// On failure, the intra pair that is not strictly below min_cross.
  std::optional<DivergencePair> violation;
};

ClusterConditionReport check_cluster_condition(std::span<const Pmf> typicals,
                                               std::span<const Pmf> outliers);

// ---------------------------------------------------------------------------
// GL failure certificate for two clustered groups
// ---------------------------------------------------------------------------

struct Example1Certificate {
  std::size_t m = 0;
  ClusterConditionReport condition;
  /// Two-cluster cost at the true split {0,1}.
  double total_true_split = 0.0;
  /// Two-cluster cost at the alternative split {0,1,2}.
  double total_alternative_split = 0.0;
  /// total_true_split - total_alternative_split.
  double difference = 0.0;
  bool alternative_not_worse = false;

  bool certified() const noexcept { return condition.holds && alternative_not_worse; }
};

/// The fixed four-distribution instance (two outliers, one lone typical, and
/// M-3 copies of a second typical) in which the condition holds yet the
/// unknown-T GL cost cannot separate the true split from moving the lone
/// typical into the outlier group. Costs are evaluated with q set to the
/// generating distributions. `m` >= 7.
Example1Certificate example1_certificate(std::size_t m = 1000);

/// Same as example1_certificate but with the lone typical replaced.
Example1Certificate example1_certificate_with(const Pmf& lone_typical, std::size_t m = 1000);

/// The generating distributions of the instance above, in index order.
std::vector<Pmf> example1_distributions(std::size_t m);

// ---------------------------------------------------------------------------
// min_q D(q||p1) + D(q||p2) by grid search
// ---------------------------------------------------------------------------

struct Lemma2Result {
  double min_value = 0.0;
  Pmf argmin;
  /// Closed form 2 B(p1, p2).
  double closed_form = 0.0;
  /// Normalized geometric mean sqrt(p1 p2) / sum sqrt(p1 p2).
  Pmf closed_form_argmin;
};

/// Grid minimization over the simplex for |Y| in {2, 3}. Inputs must have full
/// support; grid_step must lie in (0, 0.01] and 1/grid_step is rounded to the
/// nearest integer resolution.
Lemma2Result lemma2_oracle(const Pmf& p1, const Pmf& p2, double grid_step);

/// Normalized geometric mean of two pmfs.
Pmf geometric_mean(const Pmf& p1, const Pmf& p2);

// ---------------------------------------------------------------------------
// Grid estimates of constrained divergence exponents (binary alphabet)
// ---------------------------------------------------------------------------

/// D(q_lhs_from || q_lhs_to) REL D(q_rhs_from || q_rhs_to), indices 0-based.
struct DivergenceConstraint {
  enum class Relation { kLessEqual, kLess };
  std::size_t lhs_from;
  std::size_t lhs_to;
  Relation relation;
  std::size_t rhs_from;
  std::size_t rhs_to;
};

/// min sum_j D(q_j || targets[j]) subject to `constraints`, J in {3, 4}.
struct ExponentProblem {
  std::vector<Pmf> targets;
  std::vector<DivergenceConstraint> constraints;

  void validate() const;
};

struct ExponentEstimate {
  double value = kInfinity;
  double grid_step = 0.0;
  /// Empty when no grid point is feasible.
  std::vector<Pmf> minimizer;
};

/// Brute-force grid minimization over binary q_j = (k/N, 1-k/N). Strict
/// relations are evaluated as non-strict. Ties go to the lexicographically
/// smallest grid coordinates. Throws UnsupportedInput unless |Y| = 2.
ExponentEstimate estimate_exponent(const ExponentProblem& problem, double grid_step);

/// The constraint sets C1..C10 instantiated with typical `pi` and outlier
/// `mu`. For C7..C10, `pi_alt` and `mu_alt` fill the second typical or
/// outlier slot (the first defaults to pi or mu).
ExponentProblem exponent_preset(const std::string& name, const Pmf& pi, const Pmf& mu,
                                const std::optional<Pmf>& pi_alt = std::nullopt,
                                const std::optional<Pmf>& mu_alt = std::nullopt);

/// Default grid step per variable count: 1/200 for J = 3, 1/64 for J = 4.
double default_exponent_step(std::size_t variables);

// ---------------------------------------------------------------------------

/// min_i 2 B(outliers[i], typical).
double bhattacharyya_bound(const Pmf& typical, std::span<const Pmf> outliers);

}  // namespace outlierseq
