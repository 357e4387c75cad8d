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
#include <cstdint>
#include <random>
#include <vector>

#include "outlierseq/pmf.hpp"

namespace outlierseq {

/// Engine used everywhere randomness is consumed.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

/// Stream tags keep scenario construction and per-trial sampling disjoint.
enum class Stream : std::uint64_t { kScenario = 0x5343454eULL, kTrial = 0x545249414cULL };

/// Folds (stream, words...) into master_seed with SplitMix64:
///   key = mix(master_seed ^ mix(stream)); key = mix(key ^ mix(word + golden)) per word.
std::uint64_t derive_seed(std::uint64_t master_seed, Stream stream,
                          std::initializer_list<std::uint64_t> words);

/// Engine for building a scenario's distributions from the master seed.
Engine scenario_engine(std::uint64_t master_seed);

/// Engine for one Monte Carlo trial, a pure function of (master_seed, n, trial).
Engine trial_engine(std::uint64_t master_seed, std::uint64_t n, std::uint64_t trial);

/// n i.i.d. symbols drawn from `pmf`.
std::vector<Symbol> sample_sequence(const Pmf& pmf, std::size_t n, Engine& rng);

}  // namespace outlierseq
