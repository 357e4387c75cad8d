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
#include "outlierseq/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "outlierseq/analysis.hpp"
#include "outlierseq/errors.hpp"

namespace outlierseq {

namespace {

constexpr std::size_t kMaxConsecutiveRejections = 10'000;
constexpr double kMinOutlierCoordinate = 1e-6;
constexpr double kClusterFloor = 1e-4;
constexpr std::size_t kClusterAttempts = 1000;

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kIdenticalTypicalDistinctOutliers:
      return "identical-typical-distinct-outliers";
    case ScenarioKind::kIdenticalBoth: return "identical-both";
    case ScenarioKind::kTwoClusters: return "two-clusters";
  }
  return "unknown";
}

ScenarioKind parse_scenario_kind(const std::string& name) {
  for (ScenarioKind k : {ScenarioKind::kIdenticalTypicalDistinctOutliers,
                         ScenarioKind::kIdenticalBoth, ScenarioKind::kTwoClusters}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown scenario kind '" + name +
                     "' (expected identical-typical-distinct-outliers, identical-both, "
                     "two-clusters)");
}

std::vector<Pmf> Scenario::generators() const {
  std::vector<Pmf> out;
  out.reserve(sequence_count());
  std::size_t next_outlier = 0;
  std::size_t next_typical = 0;
  for (std::size_t i = 0; i < sequence_count(); ++i) {
    if (true_set.contains(i)) {
      out.push_back(outlier_pmfs[next_outlier++]);
    } else {
      out.push_back(typical_pmfs[next_typical++]);
    }
  }
  return out;
}

void Scenario::validate() const {
  if (outlier_pmfs.size() != true_set.size()) {
    throw ConfigError("scenario: outlier pmf count does not match the outlier set size");
  }
  if (typical_pmfs.size() + outlier_pmfs.size() != true_set.total()) {
    throw ConfigError("scenario: pmf count does not match M");
  }
  const std::size_t k = typical_pmfs.front().size();
  for (const auto* list : {&typical_pmfs, &outlier_pmfs}) {
    for (const Pmf& p : *list) {
      if (p.size() != k) throw ConfigError("scenario: pmfs differ in alphabet");
    }
  }
  if (kind == ScenarioKind::kIdenticalBoth || kind == ScenarioKind::kIdenticalTypicalDistinctOutliers) {
    for (const Pmf& p : typical_pmfs) {
      if (!(p == typical_pmfs.front())) throw ConfigError("scenario: typical pmfs must be identical");
    }
  }
  if (kind == ScenarioKind::kIdenticalBoth) {
    for (const Pmf& p : outlier_pmfs) {
      if (!(p == outlier_pmfs.front())) throw ConfigError("scenario: outlier pmfs must be identical");
    }
  }
  if (kind == ScenarioKind::kTwoClusters &&
      !check_cluster_condition(typical_pmfs, outlier_pmfs).holds) {
    throw ConfigError("scenario: two-clusters distributions violate the clustering condition");
  }
}

std::vector<Pmf> gen_random_outliers(const Alphabet& alphabet, std::size_t count, Engine& rng,
                                     const Pmf& typical, double min_tv_from_typical) {
  if (count < 1) throw InvalidInput("gen_random_outliers: count must be at least 1");
  if (typical.size() != alphabet.size()) {
    throw InvalidInput("gen_random_outliers: typical pmf on a different alphabet");
  }
  std::exponential_distribution<double> unit_exponential(1.0);
  std::vector<Pmf> out;
  out.reserve(count);
  std::size_t rejections = 0;
  std::vector<double> draw(alphabet.size());
  while (out.size() < count) {
    double sum = 0.0;
    for (double& v : draw) {
      v = unit_exponential(rng);
      sum += v;
    }
    for (double& v : draw) v /= sum;
    const bool floor_ok =
        std::all_of(draw.begin(), draw.end(), [](double v) { return v >= kMinOutlierCoordinate; });
    if (floor_ok) {
      Pmf candidate(draw);
      if (total_variation(candidate, typical) >= min_tv_from_typical) {
        out.push_back(std::move(candidate));
        rejections = 0;
        continue;
      }
    }
    if (++rejections >= kMaxConsecutiveRejections) {
      std::ostringstream msg;
      msg << "gen_random_outliers: " << kMaxConsecutiveRejections
          << " consecutive draws rejected; min_tv_from_typical = " << min_tv_from_typical
          << " is too strict";
      throw ConfigError(msg.str());
    }
  }
  return out;
}

std::vector<Pmf> gen_cluster(const Pmf& center, std::size_t count, double sigma, Engine& rng) {
  if (!(sigma > 0.0)) throw InvalidInput("gen_cluster: sigma must be positive");
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<Pmf> out;
  out.reserve(count);
  std::vector<double> draw(center.size());
  for (std::size_t c = 0; c < count; ++c) {
    double sum = 0.0;
    for (std::size_t y = 0; y < draw.size(); ++y) {
      draw[y] = std::max(center[y] + noise(rng), kClusterFloor);
      sum += draw[y];
    }
    for (double& v : draw) v /= sum;
    out.emplace_back(draw);
  }
  return out;
}

Scenario build_scenario(const ScenarioSpec& spec, Engine& rng) {
  const Alphabet alphabet(spec.alphabet_size);
  if (spec.m < 3) throw ConfigError("scenario: M must be at least 3");
  if (spec.t < 1 || 2 * spec.t >= spec.m) {
    std::ostringstream msg;
    msg << "scenario: need 1 <= T < M/2, got T = " << spec.t << ", M = " << spec.m;
    throw ConfigError(msg.str());
  }
  const Pmf typical = spec.typical.value_or(Pmf::uniform(spec.alphabet_size));
  if (typical.size() != spec.alphabet_size || (spec.outlier && spec.outlier->size() != spec.alphabet_size)) {
    throw ConfigError("scenario: pmf length does not match alphabet size");
  }

  std::vector<Pmf> typicals;
  std::vector<Pmf> outliers;
  switch (spec.kind) {
    case ScenarioKind::kIdenticalTypicalDistinctOutliers:
      outliers = gen_random_outliers(alphabet, spec.t, rng, typical, spec.min_tv);
      typicals.assign(spec.m - spec.t, typical);
      break;
    case ScenarioKind::kIdenticalBoth: {
      const Pmf mu = spec.outlier ? *spec.outlier
                                  : gen_random_outliers(alphabet, 1, rng, typical, spec.min_tv).front();
      outliers.assign(spec.t, mu);
      typicals.assign(spec.m - spec.t, typical);
      break;
    }
    case ScenarioKind::kTwoClusters: {
      const Pmf outlier_center =
          spec.outlier ? *spec.outlier
                       : gen_random_outliers(alphabet, 1, rng, typical, spec.min_tv).front();
      bool separated = false;
      for (std::size_t attempt = 0; attempt < kClusterAttempts && !separated; ++attempt) {
        typicals = gen_cluster(typical, spec.m - spec.t, spec.sigma, rng);
        outliers = gen_cluster(outlier_center, spec.t, spec.sigma, rng);
        separated = check_cluster_condition(typicals, outliers).holds;
      }
      if (!separated) {
        throw ConfigError("scenario: could not draw clusters satisfying the clustering condition; "
                          "reduce sigma or separate the centers");
      }
      break;
    }
  }

  std::vector<std::size_t> order(spec.m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> positions(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(spec.t));
  std::sort(positions.begin(), positions.end());

  Scenario scenario{std::move(typicals), std::move(outliers), OutlierSet(std::move(positions), spec.m),
                    spec.kind};
  scenario.validate();
  return scenario;
}

Pmf sample_empirical(const Pmf& pmf, std::size_t n, Engine& rng) {
  if (n == 0) throw InvalidInput("sample_empirical: n must be at least 1");
  const auto probs = pmf.probs();
  std::discrete_distribution<std::size_t> draw(probs.begin(), probs.end());
  std::vector<std::size_t> counts(pmf.size(), 0);
  for (std::size_t k = 0; k < n; ++k) ++counts[draw(rng)];
  std::vector<double> freq(pmf.size());
  for (std::size_t y = 0; y < freq.size(); ++y) {
    freq[y] = static_cast<double>(counts[y]) / static_cast<double>(n);
  }
  return Pmf(std::move(freq));
}

std::vector<Pmf> sample_empiricals(const Scenario& scenario, std::size_t n, Engine& rng) {
  const auto gens = scenario.generators();
  std::vector<Pmf> out;
  out.reserve(gens.size());
  for (const Pmf& g : gens) out.push_back(sample_empirical(g, n, rng));
  return out;
}

}  // namespace outlierseq
