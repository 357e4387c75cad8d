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
#include "outlierseq/manifest.hpp"

#include <chrono>
#include <ctime>

#include "outlierseq/errors.hpp"

#ifndef OUTLIERSEQ_VERSION
#define OUTLIERSEQ_VERSION "0.0.0"
#endif

namespace outlierseq::cli {

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
void read_optional(const nlohmann::json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key)) return;
  if (j.at(key).is_null()) {
    out.reset();
    return;
  }
  T value{};
  read_field(j, key, value);
  out = std::move(value);
}

}  // namespace

void to_json(nlohmann::json& j, const SimulateOptions& o) {
  j = nlohmann::json{{"preset", o.preset},
                     {"kind", o.kind},
                     {"alphabet", o.alphabet},
                     {"m", o.m},
                     {"t", o.t},
                     {"n_grid", o.n_grid},
                     {"m_grid", o.m_grid},
                     {"t_divisor", o.t_divisor},
                     {"trials", o.trials},
                     {"seed", o.seed},
                     {"tests", o.tests},
                     {"pi", o.pi ? nlohmann::json(*o.pi) : nlohmann::json(nullptr)},
                     {"mu", o.mu ? nlohmann::json(*o.mu) : nlohmann::json(nullptr)},
                     {"sigma", o.sigma},
                     {"min_tv", o.min_tv},
                     {"workers", o.workers},
                     {"max_iterations", o.max_iterations},
                     {"fixed_probe", o.fixed_probe ? nlohmann::json(*o.fixed_probe)
                                                   : nlohmann::json(nullptr)},
                     {"allow_large_enumeration", o.allow_large_enumeration}};
}

void merge_json(const nlohmann::json& j, SimulateOptions& o) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  static const char* const kKnown[] = {
      "preset", "kind",  "alphabet", "m",     "t",       "n_grid",  "m_grid",
      "t_divisor", "trials", "seed", "tests", "pi",      "mu",      "sigma",
      "min_tv", "workers", "max_iterations", "fixed_probe", "allow_large_enumeration"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || item.key() == k;
    if (!known) throw ConfigError("field '" + item.key() + "': unknown configuration key");
  }
  read_field(j, "preset", o.preset);
  read_field(j, "kind", o.kind);
  read_field(j, "alphabet", o.alphabet);
  read_field(j, "m", o.m);
  read_field(j, "t", o.t);
  read_field(j, "n_grid", o.n_grid);
  read_field(j, "m_grid", o.m_grid);
  read_field(j, "t_divisor", o.t_divisor);
  read_field(j, "trials", o.trials);
  read_field(j, "seed", o.seed);
  read_field(j, "tests", o.tests);
  read_optional(j, "pi", o.pi);
  read_optional(j, "mu", o.mu);
  read_field(j, "sigma", o.sigma);
  read_field(j, "min_tv", o.min_tv);
  read_field(j, "workers", o.workers);
  read_field(j, "max_iterations", o.max_iterations);
  read_optional(j, "fixed_probe", o.fixed_probe);
  read_field(j, "allow_large_enumeration", o.allow_large_enumeration);
}

void to_json(nlohmann::json& j, const RunManifest& m) {
  j = nlohmann::json{{"subcommand", m.subcommand},   {"config", m.config},
                     {"master_seed", m.master_seed}, {"version", m.version},
                     {"started_at", m.started_at},   {"finished_at", m.finished_at}};
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  j.at("subcommand").get_to(m.subcommand);
  m.config = j.at("config");
  j.at("master_seed").get_to(m.master_seed);
  j.at("version").get_to(m.version);
  j.at("started_at").get_to(m.started_at);
  j.at("finished_at").get_to(m.finished_at);
}

std::string version_string() { return OUTLIERSEQ_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

}  // namespace outlierseq::cli
