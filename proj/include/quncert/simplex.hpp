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

#pragma once

#include <cstdint>
#include <vector>

#include "quncert/rng.hpp"

namespace quncert {

/// Construction tolerance band around the simplex. Born probabilities
/// tr(rho A_i) can round to tiny negatives for boundary states, so values in
/// [-kSimplexTol, 0) are accepted and clamped to 0.
inline constexpr double kSimplexTol = 1e-9;

/// Tolerance for the two distinguished-distribution predicates.
inline constexpr double kDistTol = 1e-9;

class Permutation;

/// A point of the probability simplex: d >= 2 components in [0, 1] summing
/// to 1. Immutable after construction; construction clamps components into
/// [0, 1] and renormalizes so the stored values sum to 1 in floating point.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return probs_; }

  double max_component() const;
  double sum() const;

 private:
  struct Prevalidated {};
  ProbabilityVector(Prevalidated, std::vector<double> values) : probs_(std::move(values)) {}

  // reordering valid components cannot break an invariant, and revalidating
  // would renormalize and so perturb the multiset
  friend ProbabilityVector permute(const ProbabilityVector& x, const Permutation& h);

  std::vector<double> probs_;
};

/// A bijection on {0..d-1}, stored as the image array. Validity is checked
/// eagerly: a malformed permutation would silently corrupt symmetry tests.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int d);
  static Permutation random(int d, Rng& rng);  // Fisher-Yates

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<int> images_;
};

/// Componentwise lambda*x + (1-lambda)*y; lambda must lie in [0, 1].
ProbabilityVector convex_combine(const ProbabilityVector& x, const ProbabilityVector& y,
                                 double lambda);

/// Component i of the result is x[h(i)].
ProbabilityVector permute(const ProbabilityVector& x, const Permutation& h);

/// True iff some component is >= 1 - kDistTol (a simplex vertex).
bool is_maximal_certainty(const ProbabilityVector& x);

/// True iff every component is within kDistTol of 1/d (the uniform point).
bool is_maximal_uncertainty(const ProbabilityVector& x);

ProbabilityVector uniform_distribution(int d);
ProbabilityVector vertex_distribution(int d, int i);

/// Uniform sample from the simplex via normalized exponential spacings;
/// the law is permutation invariant, which the symmetry axiom tests need.
ProbabilityVector sample_simplex(int d, Rng& rng);

/// Deterministic-by-seed convenience wrapper around sample_simplex.
ProbabilityVector sample_random(int d, std::uint64_t seed);

}  // namespace quncert
