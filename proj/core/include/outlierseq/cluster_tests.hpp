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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "outlierseq/pmf.hpp"

namespace outlierseq {

inline constexpr std::size_t kDefaultIterationCap = 100;

/// How many assignment/re-estimation rounds a clustering test may run.
///
/// `fixed(l)` runs exactly l rounds (the l-step test); `until_convergence()`
/// runs until the assignment stops changing, bounded by a safety cap.
class StopRule {
 public:
  enum class Mode { kFixedSteps, kUntilConvergence };

  static StopRule fixed(std::size_t steps);
  static StopRule until_convergence(std::size_t cap = kDefaultIterationCap);

  Mode mode() const noexcept { return mode_; }
  std::size_t max_iterations() const noexcept { return max_iterations_; }

 private:
  StopRule(Mode mode, std::size_t max_iterations);

  Mode mode_;
  std::size_t max_iterations_;
};

/// Two-center clustering state. `assignment[i]` is 0 or 1; `degenerate` is
/// set when an assignment step left a cluster empty.
struct ClusterState {
  std::vector<Pmf> centers;
  std::vector<std::size_t> assignment;
  bool degenerate = false;

  std::size_t k() const noexcept { return centers.size(); }
  std::vector<std::size_t> members(std::size_t cluster) const;
};

/// Result of a clustering-based detection test.
///
/// `detected` is the increasing index list reported as outlying. A balanced
/// two-cluster split (|S| = M/2) is reported as-is even though it is not an
/// admissible hypothesis. When `no_outliers_found` is set the clustering
/// collapsed into one cluster and `detected` is empty.
struct TestOutcome {
  std::vector<std::size_t> detected;
  std::size_t iterations = 0;
  std::vector<double> cost_trace;
  bool converged = false;
  bool no_outliers_found = false;
  /// Set when an until-convergence run stopped at its cap.
  bool hit_iteration_cap = false;
};

/// Initial typical center: the gamma whose divergence to the probe ranks
/// ceil(M/2)-th smallest.
Pmf init_known_t(std::span<const Pmf> gammas, std::size_t probe_index);

/// Known-T test: alternate top-t assignment and re-centering on the rest.
TestOutcome delta2(std::span<const Pmf> gammas, std::size_t t, const StopRule& stop,
                   std::size_t probe_index = 0);

/// Initial centers (c1, c2): c1 maximizes D(gamma_i || probe), c2 is the probe.
std::pair<Pmf, Pmf> init_unknown(std::span<const Pmf> gammas, std::size_t probe_index);

struct KMeansResult {
  ClusterState state;
  std::vector<double> cost_trace;
  std::size_t iterations = 0;
  bool converged = false;
  bool hit_iteration_cap = false;
};

/// Two-center K-means with D(gamma || center) as the distance. Ties go to
/// cluster 0; an emptied cluster keeps its previous center.
KMeansResult kmeans2(std::span<const Pmf> gammas, Pmf c1, Pmf c2, const StopRule& stop);

/// Unknown-T test: init_unknown followed by kmeans2; the smaller final
/// cluster is reported.
TestOutcome delta3(std::span<const Pmf> gammas, const StopRule& stop,
                   std::size_t probe_index = 0);

/// Sum over i of D(gamma_i || center of i's cluster).
double clustering_cost(std::span<const Pmf> gammas, const ClusterState& state);

/// Test names accepted by the CLI and the simulation harness.
enum class TestKind { kGlKnown, kGlUnknown, kDelta2, kDelta2OneStep, kDelta3, kDelta3OneStep };

std::string to_string(TestKind kind);
TestKind parse_test_kind(const std::string& name);
bool needs_known_t(TestKind kind);

}  // namespace outlierseq
