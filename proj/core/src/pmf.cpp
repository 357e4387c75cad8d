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
#include "outlierseq/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "outlierseq/errors.hpp"

namespace outlierseq {

namespace {

constexpr double kRenormalizeTolerance = 1e-9;

void require_same_alphabet(const Pmf& p, const Pmf& q, const char* what) {
  if (p.size() != q.size()) {
    std::ostringstream msg;
    msg << what << ": alphabet mismatch (" << p.size() << " vs " << q.size() << ")";
    throw InvalidInput(msg.str());
  }
}

std::vector<double> symbol_counts(std::span<const Symbol> seq, const Alphabet& alphabet) {
  if (seq.empty()) throw InvalidInput("empirical: sequence is empty");
  std::vector<double> counts(alphabet.size(), 0.0);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] >= alphabet.size()) {
      std::ostringstream msg;
      msg << "empirical: symbol " << seq[k] << " at position " << k
          << " is outside alphabet of size " << alphabet.size();
      throw InvalidInput(msg.str());
    }
    counts[seq[k]] += 1.0;
  }
  return counts;
}

}  // namespace

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size < 2) throw InvalidInput("alphabet size must be at least 2");
}

Pmf::Pmf(std::vector<double> probs, Unchecked)
    : probs_(std::move(probs)), alphabet_(probs_.size()) {}

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)), alphabet_(probs_.size()) {
  double sum = 0.0;
  for (double v : probs_) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidInput("pmf entries must be finite and nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kRenormalizeTolerance) {
    std::ostringstream msg;
    msg << "pmf entries sum to " << sum << ", not 1";
    throw InvalidInput(msg.str());
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    for (double& v : probs_) v /= sum;
  }
}

Pmf Pmf::uniform(std::size_t alphabet_size) {
  Alphabet alphabet(alphabet_size);
  return Pmf(std::vector<double>(alphabet.size(), 1.0 / static_cast<double>(alphabet.size())),
             Unchecked{});
}

bool Pmf::full_support(double floor) const noexcept {
  return std::all_of(probs_.begin(), probs_.end(), [floor](double v) { return v >= floor; });
}

Pmf empirical(std::span<const Symbol> seq, const Alphabet& alphabet) {
  auto counts = symbol_counts(seq, alphabet);
  const double n = static_cast<double>(seq.size());
  for (double& c : counts) c /= n;
  return Pmf(std::move(counts), Pmf::Unchecked{});
}

Pmf empirical_smoothed(std::span<const Symbol> seq, const Alphabet& alphabet, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidInput("empirical_smoothed: lambda must be finite and nonnegative");
  }
  if (lambda == 0.0) return empirical(seq, alphabet);
  auto counts = symbol_counts(seq, alphabet);
  const double denom =
      static_cast<double>(seq.size()) + lambda * static_cast<double>(alphabet.size());
  for (double& c : counts) c = (c + lambda) / denom;
  return Pmf(std::move(counts), Pmf::Unchecked{});
}

double kl(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q, "kl");
  double sum = 0.0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    const double py = p[y];
    if (py == 0.0) continue;
    const double qy = q[y];
    if (qy == 0.0) return kInfinity;
    sum += py * std::log(py / qy);
  }
  // Rounding can leave a tiny negative sum when p and q nearly coincide.
  return std::max(sum, 0.0);
}

double bhattacharyya(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q, "bhattacharyya");
  double coefficient = 0.0;
  for (std::size_t y = 0; y < p.size(); ++y) coefficient += std::sqrt(p[y] * q[y]);
  if (coefficient == 0.0) return kInfinity;
  return std::max(-std::log(coefficient), 0.0);
}

Pmf average(std::span<const Pmf> pmfs) {
  if (pmfs.empty()) throw InvalidInput("average: empty list");
  const std::size_t k = pmfs.front().size();
  std::vector<double> mean(k, 0.0);
  for (std::size_t y = 0; y < k; ++y) {
    const double first = pmfs.front()[y];
    bool all_equal = true;
    double sum = 0.0;
    for (const Pmf& p : pmfs) {
      if (p.size() != k) throw InvalidInput("average: alphabet mismatch");
      all_equal = all_equal && p[y] == first;
      sum += p[y];
    }
    mean[y] = all_equal ? first : sum / static_cast<double>(pmfs.size());
  }
  return Pmf(std::move(mean), Pmf::Unchecked{});
}

Pmf average_of(std::span<const Pmf> pmfs, std::span<const std::size_t> indices) {
  if (indices.empty()) throw InvalidInput("average_of: empty index list");
  for (std::size_t i : indices) {
    if (i >= pmfs.size()) throw InvalidInput("average_of: index out of range");
  }
  const Pmf& front = pmfs[indices.front()];
  const std::size_t k = front.size();
  std::vector<double> mean(k, 0.0);
  for (std::size_t y = 0; y < k; ++y) {
    const double first = front[y];
    bool all_equal = true;
    double sum = 0.0;
    for (std::size_t i : indices) {
      const Pmf& p = pmfs[i];
      if (p.size() != k) throw InvalidInput("average_of: alphabet mismatch");
      all_equal = all_equal && p[y] == first;
      sum += p[y];
    }
    mean[y] = all_equal ? first : sum / static_cast<double>(indices.size());
  }
  return Pmf(std::move(mean), Pmf::Unchecked{});
}

double total_variation(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q, "total_variation");
  double sum = 0.0;
  for (std::size_t y = 0; y < p.size(); ++y) sum += std::abs(p[y] - q[y]);
  return 0.5 * sum;
}

SequenceSet::SequenceSet(std::vector<std::vector<Symbol>> rows, Alphabet alphabet)
    : rows_(std::move(rows)), alphabet_(alphabet) {
  if (rows_.size() < 3) throw InvalidInput("a sequence set needs at least 3 sequences");
  const std::size_t n = rows_.front().size();
  if (n == 0) throw InvalidInput("sequences must contain at least one sample");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n) {
      std::ostringstream msg;
      msg << "sequence " << i << " has length " << rows_[i].size() << ", expected " << n;
      throw InvalidInput(msg.str());
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (rows_[i][k] >= alphabet_.size()) {
        std::ostringstream msg;
        msg << "sequence " << i << ", position " << k << ": symbol " << rows_[i][k]
            << " outside alphabet of size " << alphabet_.size();
        throw InvalidInput(msg.str());
      }
    }
  }
}

std::vector<Pmf> SequenceSet::empiricals() const {
  std::vector<Pmf> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(empirical(r, alphabet_));
  return out;
}

}  // namespace outlierseq
