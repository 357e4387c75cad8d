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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace outlierseq::cli {

/// Fully resolved `simulate` configuration (preset, then config file, then flags).
struct SimulateOptions {
  std::string preset;
  std::string kind = "identical-both";
  std::size_t alphabet = 10;
  std::size_t m = 20;
  std::size_t t = 3;
  std::vector<std::size_t> n_grid;
  /// When nonempty, M is swept over these values with T = M / t_divisor at n_grid[0].
  std::vector<std::size_t> m_grid;
  std::size_t t_divisor = 5;
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
  std::vector<std::string> tests;
  std::optional<std::vector<double>> pi;
  std::optional<std::vector<double>> mu;
  double sigma = 0.01;
  double min_tv = 0.1;
  std::size_t workers = 1;
  std::size_t max_iterations = 100;
  std::optional<std::size_t> fixed_probe;
  bool allow_large_enumeration = false;

  friend bool operator==(const SimulateOptions&, const SimulateOptions&) = default;
};

void to_json(nlohmann::json& j, const SimulateOptions& o);
/// Missing keys keep their current values; type errors raise ConfigError naming the field.
void merge_json(const nlohmann::json& j, SimulateOptions& o);

struct RunManifest {
  std::string subcommand;
  nlohmann::json config;
  std::uint64_t master_seed = 0;
  std::string version;
  std::string started_at;
  std::string finished_at;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

/// Version string compiled into the tool.
std::string version_string();

/// Current UTC time as ISO 8601 with seconds.
std::string utc_timestamp();

}  // namespace outlierseq::cli
