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
#include <vector>

namespace outlierseq {

struct RankedValue {
  double value;
  std::size_t index;
};

/// k-th smallest (1-indexed) of `values` in expected linear time.
///
/// Order is by value with +inf above every finite value; equal values rank by
/// smaller original index. NaN entries are rejected.
RankedValue kth_smallest(std::span<const double> values, std::size_t k);

/// Indices of the `t` largest values (ties prefer the smaller index), returned
/// in increasing index order. Expected linear time.
std::vector<std::size_t> top_t_largest(std::span<const double> values, std::size_t t);

}  // namespace outlierseq
