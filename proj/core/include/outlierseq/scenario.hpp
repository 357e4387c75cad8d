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
#include <string>
#include <vector>

#include "outlierseq/gl_tests.hpp"
#include "outlierseq/pmf.hpp"
#include "outlierseq/rng.hpp"

namespace outlierseq {

enum class ScenarioKind { kIdenticalTypicalDistinctOutliers, kIdenticalBoth, kTwoClusters };

std::string to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(const std::string& name);

/// Generating distributions for one detection problem.
///
/// `typical_pmfs` lists the generators of the complement of `true_set` in
/// increasing index order; `outlier_pmfs` those of `true_set`.
struct Scenario {
  std::vector<Pmf> typical_pmfs;
  std::vector<Pmf> outlier_pmfs;
  OutlierSet true_set;
  ScenarioKind kind;

  std::size_t sequence_count() const noexcept { return true_set.total(); }
  std::size_t alphabet_size() const noexcept { return typical_pmfs.front().size(); }

  /// Per-sequence generators in index order.
  std::vector<Pmf> generators() const;

  /// Checks list sizes, alphabets, and for two-clusters the separation condition.
  void validate() const;
};

/// Pmfs uniform on the simplex (normalized unit exponentials), rejecting any
/// draw with a coordinate below 1e-6 or within `min_tv_from_typical` total
/// variation of `typical`. Throws ConfigError after 10^4 consecutive rejections.
std::vector<Pmf> gen_random_outliers(const Alphabet& alphabet, std::size_t count, Engine& rng,
                                     const Pmf& typical, double min_tv_from_typical = 0.1);

/// Noisy copies of `center`: add N(0, sigma^2) per coordinate, clamp at 1e-4,
/// renormalize.
std::vector<Pmf> gen_cluster(const Pmf& center, std::size_t count, double sigma, Engine& rng);

/// Recipe for a Scenario. Unset pmfs default to uniform (typical) or a random
/// draw via gen_random_outliers (outlier, or outlier cluster center).
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kIdenticalBoth;
  std::size_t alphabet_size = 10;
  std::size_t m = 20;
  std::size_t t = 3;
  std::optional<Pmf> typical;
  std::optional<Pmf> outlier;
  double min_tv = 0.1;
  double sigma = 0.01;
};

/// Draws the outlier distributions first and the outlier positions second, so
/// specs differing only in M and T share their distributions for one engine seed.
Scenario build_scenario(const ScenarioSpec& spec, Engine& rng);

/// Samples every sequence of `scenario` for n steps and returns the empirical pmfs.
std::vector<Pmf> sample_empiricals(const Scenario& scenario, std::size_t n, Engine& rng);

/// Empirical pmf of n i.i.d. draws from `pmf` without materializing the sequence.
Pmf sample_empirical(const Pmf& pmf, std::size_t n, Engine& rng);

}  // namespace outlierseq
