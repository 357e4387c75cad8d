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
#include "outlierseq/rng.hpp"

namespace outlierseq {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, Stream stream,
                          std::initializer_list<std::uint64_t> words) {
  std::uint64_t key = splitmix64_mix(master_seed ^ splitmix64_mix(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t w : words) key = splitmix64_mix(key ^ splitmix64_mix(w + kGolden));
  return key;
}

Engine scenario_engine(std::uint64_t master_seed) {
  return Engine(derive_seed(master_seed, Stream::kScenario, {}));
}

Engine trial_engine(std::uint64_t master_seed, std::uint64_t n, std::uint64_t trial) {
  return Engine(derive_seed(master_seed, Stream::kTrial, {n, trial}));
}

std::vector<Symbol> sample_sequence(const Pmf& pmf, std::size_t n, Engine& rng) {
  const auto probs = pmf.probs();
  std::discrete_distribution<Symbol> draw(probs.begin(), probs.end());
  std::vector<Symbol> out(n);
  for (auto& s : out) s = draw(rng);
  return out;
}

}  // namespace outlierseq
