// Copyright 2026 The quncert authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quncert/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quncert/errors.hpp"

namespace quncert {

ProbabilityVector::ProbabilityVector(std::vector<double> values) : probs_(std::move(values)) {
  if (probs_.size() < 2) {
    throw ValidationError("probability vector needs at least 2 components, got " +
                          std::to_string(probs_.size()));
  }
  for (double p : probs_) {
    if (!std::isfinite(p) || p < -kSimplexTol || p > 1.0 + kSimplexTol) {
      throw ValidationError("probability component " + std::to_string(p) +
                            " outside tolerance band [-1e-9, 1+1e-9]");
    }
  }
  double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kSimplexTol) {
    throw ValidationError("probabilities sum to " + std::to_string(total) +
                          ", more than 1e-9 away from 1");
  }
  for (double& p : probs_) p = std::clamp(p, 0.0, 1.0);
  total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  for (double& p : probs_) p /= total;
  // push the residual into the largest component so the stored sum is 1
  const auto largest = std::max_element(probs_.begin(), probs_.end());
  *largest -= std::accumulate(probs_.begin(), probs_.end(), 0.0) - 1.0;
  *largest = std::clamp(*largest, 0.0, 1.0);
}

double ProbabilityVector::max_component() const {
  return *std::max_element(probs_.begin(), probs_.end());
}

double ProbabilityVector::sum() const {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation image array is not a bijection on {0.." +
                            std::to_string(d - 1) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::random(int d, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(i) + 1));
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

ProbabilityVector convex_combine(const ProbabilityVector& x, const ProbabilityVector& y,
                                 double lambda) {
  if (x.size() != y.size()) {
    throw DimensionError("convex_combine: dimension mismatch, " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("convex_combine: lambda = " + std::to_string(lambda) +
                          " outside [0, 1]");
  }
  std::vector<double> mixed(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i)
    mixed[static_cast<std::size_t>(i)] = lambda * x[i] + (1.0 - lambda) * y[i];
  return ProbabilityVector(std::move(mixed));
}

ProbabilityVector permute(const ProbabilityVector& x, const Permutation& h) {
  if (x.size() != h.size()) {
    throw DimensionError("permute: vector has " + std::to_string(x.size()) +
                         " components but permutation acts on " + std::to_string(h.size()));
  }
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x[h(i)];
  return ProbabilityVector(ProbabilityVector::Prevalidated{}, std::move(out));
}

bool is_maximal_certainty(const ProbabilityVector& x) {
  return x.max_component() >= 1.0 - kDistTol;
}

bool is_maximal_uncertainty(const ProbabilityVector& x) {
  const double target = 1.0 / x.size();
  for (int i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - target) > kDistTol) return false;
  return true;
}

ProbabilityVector uniform_distribution(int d) {
  if (d < 2) throw ValidationError("uniform_distribution: d must be >= 2");
  return ProbabilityVector(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
}

ProbabilityVector vertex_distribution(int d, int i) {
  if (d < 2 || i < 0 || i >= d) {
    throw ValidationError("vertex_distribution: index " + std::to_string(i) +
                          " out of range for d = " + std::to_string(d));
  }
  std::vector<double> values(static_cast<std::size_t>(d), 0.0);
  values[static_cast<std::size_t>(i)] = 1.0;
  return ProbabilityVector(std::move(values));
}

ProbabilityVector sample_simplex(int d, Rng& rng) {
  if (d < 2) throw ValidationError("sample_simplex: d must be >= 2, got " + std::to_string(d));
  std::vector<double> values(static_cast<std::size_t>(d));
  double total = 0.0;
  for (double& v : values) {
    v = rng.exponential();
    total += v;
  }
  for (double& v : values) v /= total;
  return ProbabilityVector(std::move(values));
}

ProbabilityVector sample_random(int d, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0));
  return sample_simplex(d, rng);
}

}  // namespace quncert
