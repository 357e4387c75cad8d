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
#include "outlierseq/presets.hpp"

#include "outlierseq/errors.hpp"

namespace outlierseq::cli {

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig5", "fig6", "fig7"}; }

SimulateOptions preset_options(const std::string& name) {
  SimulateOptions o;
  o.preset = name;
  o.alphabet = 10;
  o.trials = 2000;
  if (name == "fig3") {
    // Known T, uniform typical, randomly drawn distinct outliers.
    o.kind = "identical-typical-distinct-outliers";
    o.m = 20;
    o.t = 3;
    o.n_grid = {10, 20, 30, 40, 50, 60, 70, 80};
    o.tests = {"gl-known", "delta2", "delta2-1"};
  } else if (name == "fig4") {
    o.kind = "identical-both";
    o.m = 100;
    o.t = 10;
    o.n_grid = {40, 60, 80, 100, 120, 140, 160, 180, 200};
    o.tests = {"delta3", "delta3-1"};
  } else if (name == "fig5") {
    o.kind = "two-clusters";
    o.m = 100;
    o.t = 10;
    o.n_grid = {40, 60, 80, 100, 120, 140, 160, 180, 200};
    o.tests = {"delta3", "delta3-1"};
  } else if (name == "fig6") {
    o.kind = "identical-both";
    o.m = 100;
    o.t = 10;
    o.n_grid = {50, 100, 200, 400, 800, 1600};
    o.trials = 300;
    o.tests = {"delta3"};
  } else if (name == "fig7") {
    o.kind = "identical-both";
    o.m_grid = {40, 80, 120, 160, 200};
    o.m = 40;
    o.t = 8;
    o.t_divisor = 5;
    o.n_grid = {400};
    o.trials = 300;
    o.tests = {"delta3"};
  } else {
    throw ConfigError("preset: unknown preset '" + name + "' (expected fig3..fig7)");
  }
  return o;
}

}  // namespace outlierseq::cli
