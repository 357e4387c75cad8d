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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "outlierseq/errors.hpp"
#include "outlierseq/gl_tests.hpp"
#include "random_pmfs.hpp"

using namespace outlierseq;

namespace {

std::vector<Pmf> three() { return {Pmf({0.5, 0.5}), Pmf({0.5, 0.5}), Pmf({0.9, 0.1})}; }

// Independent cost evaluation: means accumulated by hand, KL summed directly.
double sum_to_mean(const std::vector<Pmf>& g, const std::vector<std::size_t>& members) {
  const std::size_t k = g.front().size();
  std::vector<double> mean(k, 0.0);
  for (auto i : members) {
    for (std::size_t y = 0; y < k; ++y) mean[y] += g[i][y] / static_cast<double>(members.size());
  }
  double total = 0.0;
  for (auto i : members) {
    for (std::size_t y = 0; y < k; ++y) {
      if (g[i][y] > 0.0) total += g[i][y] * std::log(g[i][y] / mean[y]);
    }
  }
  return total;
}

// Enumerates subsets by bitmask (a different order from the library) and keeps the
// best under (cost, size, lexicographic) with a relative tolerance on cost ties.
std::vector<std::size_t> brute_force(const std::vector<Pmf>& g, bool unknown, std::size_t t) {
  const std::size_t m = g.size();
  double best = kInfinity;
  std::vector<std::size_t> arg;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> s, c;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? s : c).push_back(i);
    if (unknown ? 2 * s.size() >= m : s.size() != t) continue;
    const double cost = sum_to_mean(g, c) + (unknown ? sum_to_mean(g, s) : 0.0);
    const bool better = cost < best - 1e-12 ||
                        (std::abs(cost - best) <= 1e-12 &&
                         (s.size() < arg.size() || (s.size() == arg.size() && s < arg)));
    if (better) {
      best = std::min(best, cost);
      arg = s;
    }
  }
  return arg;
}

std::vector<std::size_t> as_vector(const OutlierSet& s) { return {s.indices().begin(), s.indices().end()}; }

}  // namespace

TEST_CASE("outlier set validation") {
  CHECK_THROWS_AS(OutlierSet({}, 5), InvalidInput);
  CHECK_THROWS_AS(OutlierSet({0, 1, 2}, 6), InvalidInput);
  CHECK_THROWS_AS(OutlierSet({1, 1}, 6), InvalidInput);
  CHECK_THROWS_AS(OutlierSet({2, 1}, 6), InvalidInput);
  CHECK_THROWS_AS(OutlierSet({7}, 6), InvalidInput);
  const OutlierSet s({1, 4}, 6);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(0));
  CHECK(s.complement() == std::vector<std::size_t>{0, 2, 3, 5});
}

TEST_CASE("known-T cost") {
  const auto g = three();
  CHECK(gl_cost_known_t(g, OutlierSet({2}, 3)) == 0.0);
  CHECK(std::abs(gl_cost_known_t(g, OutlierSet({0}, 3)) - 0.203498) <= 1e-5);
  CHECK(gl_cost_known_t(g, OutlierSet({0}, 3)) ==
        doctest::Approx(kl(g[1], Pmf({0.7, 0.3})) + kl(g[2], Pmf({0.7, 0.3}))).epsilon(1e-12));
  const std::vector<Pmf> four{Pmf({0.2, 0.8}), Pmf({0.5, 0.5}), Pmf({0.7, 0.3}), Pmf({0.9, 0.1})};
  CHECK(gl_cost_known_t(std::vector<Pmf>(four.begin(), four.begin() + 3), OutlierSet({0}, 3)) > 0.0);
}

TEST_CASE("known-T test") {
  CHECK(as_vector(gl_test_known_t(three(), 1)) == std::vector<std::size_t>{2});
  const std::vector<Pmf> same(7, Pmf({0.3, 0.7}));
  CHECK(as_vector(gl_test_known_t(same, 1)) == std::vector<std::size_t>{0});
  CHECK(as_vector(gl_test_known_t(same, 3)) == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(gl_test_known_t(same, 4), InvalidInput);
  CHECK_THROWS_AS(gl_test_known_t(same, 0), InvalidInput);
}

TEST_CASE("known-T test matches brute force") {
  Engine rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 6 + trial % 4;
    const std::size_t t = 1 + trial % ((m - 1) / 2);
    const auto g = testing::random_pmfs(m, 3, rng);
    const OutlierSet s = gl_test_known_t(g, t);
    CHECK(as_vector(s) == brute_force(g, false, t));
  }
}

TEST_CASE("known-T argmin property") {
  Engine rng(19);
  const auto g = testing::random_pmfs(8, 4, rng);
  const OutlierSet best = gl_test_known_t(g, 3);
  const double c = gl_cost_known_t(g, best);
  std::vector<std::size_t> idx(3);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b)
      for (std::size_t d = b + 1; d < 8; ++d) CHECK(c <= gl_cost_known_t(g, OutlierSet({a, b, d}, 8)));
}

TEST_CASE("unknown-T cost") {
  const auto g = three();
  const auto c = gl_cost_unknown(g, OutlierSet({2}, 3));
  CHECK(c.typical_cost == 0.0);
  CHECK(c.outlier_cost == 0.0);
  CHECK(c.total == 0.0);
  const std::vector<Pmf> groups{Pmf({0.9, 0.1}), Pmf({0.2, 0.8}), Pmf({0.9, 0.1}), Pmf({0.2, 0.8}),
                                Pmf({0.2, 0.8})};
  CHECK(gl_cost_unknown(groups, OutlierSet({0, 2}, 5)).total == 0.0);
  Engine rng(23);
  const auto r = testing::random_pmfs(7, 3, rng);
  const auto b = gl_cost_unknown(r, OutlierSet({1, 5}, 7));
  CHECK(b.total == b.typical_cost + b.outlier_cost);
}

TEST_CASE("unknown-T test") {
  const std::vector<Pmf> g{Pmf({0.12, 0.88}), Pmf({0.88, 0.12}), Pmf({0.1, 0.9}), Pmf({0.91, 0.09}),
                           Pmf({0.09, 0.91})};
  CHECK(as_vector(gl_test_unknown(g)) == std::vector<std::size_t>{1, 3});
  const std::vector<Pmf> same(6, Pmf({0.3, 0.7}));
  CHECK(as_vector(gl_test_unknown(same)) == std::vector<std::size_t>{0});
}

TEST_CASE("unknown-T test matches brute force") {
  Engine rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 5 + trial % 4;
    const auto g = testing::random_pmfs(m, 3, rng);
    CHECK(as_vector(gl_test_unknown(g)) == brute_force(g, true, 0));
  }
}

TEST_CASE("two-cluster cost agrees with the breakdown") {
  Engine rng(31);
  const auto g = testing::random_pmfs(9, 4, rng);
  const OutlierSet s({2, 3, 7}, 9);
  const std::vector<std::size_t> members{2, 3, 7};
  CHECK(two_cluster_cost(g, members) == gl_cost_unknown(g, s).total);
}

TEST_CASE("relabeling invariance of the unknown-T cost") {
  Engine rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 9;
    const auto g = testing::random_pmfs(m, 3, rng);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Pmf> h(g);
    for (std::size_t i = 0; i < m; ++i) h[perm[i]] = g[i];
    const OutlierSet s({0, 4, 5}, m);
    std::vector<std::size_t> mapped{perm[0], perm[4], perm[5]};
    std::sort(mapped.begin(), mapped.end());
    CHECK(gl_cost_unknown(h, OutlierSet(mapped, m)).total ==
          doctest::Approx(gl_cost_unknown(g, s).total).epsilon(1e-12));
    const auto a = as_vector(gl_test_unknown(g));
    std::vector<std::size_t> b;
    for (auto i : a) b.push_back(perm[i]);
    std::sort(b.begin(), b.end());
    CHECK(as_vector(gl_test_unknown(h)) == b);
  }
}

TEST_CASE("enumeration caps") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(100, 50) == std::numeric_limits<std::uint64_t>::max());
  const std::vector<Pmf> many(30, Pmf({0.5, 0.5}));
  CHECK_THROWS_AS(gl_test_unknown(many), EnumerationRefused);
  try {
    gl_test_unknown(many);
  } catch (const EnumerationRefused& e) {
    CHECK(std::string(e.what()).find(kAllowLargeEnumerationFlag) != std::string::npos);
  }
  const std::vector<Pmf> wide(60, Pmf({0.5, 0.5}));
  CHECK_THROWS_AS(gl_test_known_t(wide, 10), EnumerationRefused);
  GlOptions tight;
  tight.max_hypotheses = 2;
  CHECK_THROWS_AS(gl_test_known_t(three(), 1, tight), EnumerationRefused);
  const std::vector<Pmf> small(26, Pmf({0.5, 0.5}));
  GlOptions lifted;
  lifted.allow_large = true;
  CHECK(gl_test_known_t(small, 1, lifted).size() == 1);
}
