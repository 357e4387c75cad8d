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
#include "outlierseq/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "outlierseq/errors.hpp"

namespace outlierseq {

namespace {

std::vector<std::size_t> checked_indices(std::span<const double> values, const char* what) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (double v : values) {
    if (std::isnan(v)) throw InvalidInput(std::string(what) + ": NaN value");
  }
  return idx;
}

}  // namespace

// std::nth_element is introselect: expected linear, worst case O(n log n).
RankedValue kth_smallest(std::span<const double> values, std::size_t k) {
  if (k < 1 || k > values.size()) {
    std::ostringstream msg;
    msg << "kth_smallest: rank " << k << " outside 1.." << values.size();
    throw InvalidInput(msg.str());
  }
  auto idx = checked_indices(values, "kth_smallest");
  auto ascending = [values](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  };
  std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k - 1), idx.end(),
                   ascending);
  const std::size_t at = idx[k - 1];
  return {values[at], at};
}

std::vector<std::size_t> top_t_largest(std::span<const double> values, std::size_t t) {
  if (t < 1 || t > values.size()) {
    std::ostringstream msg;
    msg << "top_t_largest: t = " << t << " outside 1.." << values.size();
    throw InvalidInput(msg.str());
  }
  auto idx = checked_indices(values, "top_t_largest");
  auto descending = [values](std::size_t a, std::size_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  };
  if (t < idx.size()) {
    std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(t - 1), idx.end(),
                     descending);
  }
  // Collect in index order through a mask to stay linear.
  std::vector<char> chosen(values.size(), 0);
  for (std::size_t r = 0; r < t; ++r) chosen[idx[r]] = 1;
  std::vector<std::size_t> out;
  out.reserve(t);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace outlierseq
