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
#include <limits>
#include <span>
#include <vector>

namespace outlierseq {

using Symbol = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Default threshold below which a probability counts as outside the support.
inline constexpr double kDefaultSupportFloor = 1e-12;

/// Finite alphabet {0, ..., size-1}.
class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_;
};

/// Probability mass function over an Alphabet.
///
/// Entries are nonnegative and sum to one within 1e-12. The checked
/// constructor accepts vectors whose sum is within 1e-9 of one and
/// renormalizes them; anything further off is rejected.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  static Pmf uniform(std::size_t alphabet_size);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t y) const { return probs_[y]; }

  /// True iff every entry is at least `floor`.
  bool full_support(double floor = kDefaultSupportFloor) const noexcept;

  friend bool operator==(const Pmf& a, const Pmf& b) { return a.probs_ == b.probs_; }

 private:
  struct Unchecked {};
  Pmf(std::vector<double> probs, Unchecked);

  friend Pmf average(std::span<const Pmf> pmfs);
  friend Pmf average_of(std::span<const Pmf> pmfs, std::span<const std::size_t> indices);
  friend Pmf empirical(std::span<const Symbol> seq, const Alphabet& alphabet);
  friend Pmf empirical_smoothed(std::span<const Symbol> seq, const Alphabet& alphabet,
                                double lambda);

  std::vector<double> probs_;
  Alphabet alphabet_;
};

/// Symbol frequencies count(y)/n of one sequence.
Pmf empirical(std::span<const Symbol> seq, const Alphabet& alphabet);

/// Add-lambda smoothed frequencies (count(y)+lambda)/(n+lambda*|Y|).
/// lambda = 0 reproduces empirical().
Pmf empirical_smoothed(std::span<const Symbol> seq, const Alphabet& alphabet, double lambda);

/// KL divergence D(p||q) in nats. Returns +inf when p puts mass where q has none.
double kl(const Pmf& p, const Pmf& q);

/// Bhattacharyya distance -log sum sqrt(p q) in nats; +inf for disjoint supports.
double bhattacharyya(const Pmf& p, const Pmf& q);

/// Coordinate-wise mean. A coordinate on which all inputs agree is copied
/// exactly, so the mean of identical pmfs is bit-identical to them.
Pmf average(std::span<const Pmf> pmfs);

/// Mean of the pmfs selected by `indices`.
Pmf average_of(std::span<const Pmf> pmfs, std::span<const std::size_t> indices);

/// Total variation distance, half the L1 distance.
double total_variation(const Pmf& p, const Pmf& q);

/// M sequences of n symbols each over a common alphabet. M >= 3, n >= 1.
class SequenceSet {
 public:
  SequenceSet(std::vector<std::vector<Symbol>> rows, Alphabet alphabet);

  std::size_t sequence_count() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return rows_.front().size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> row(std::size_t i) const { return rows_.at(i); }

  std::vector<Pmf> empiricals() const;

 private:
  std::vector<std::vector<Symbol>> rows_;
  Alphabet alphabet_;
};

}  // namespace outlierseq
