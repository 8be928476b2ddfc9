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

#include <vector>

#include "quncert/linalg.hpp"
#include "quncert/rng.hpp"
#include "quncert/simplex.hpp"

namespace quncert {

// JSON-sourced matrices and mixtures of them accumulate rounding, so the
// positivity and completeness checks carry these absolute tolerances.
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kZeroEffectTol = 1e-10;
inline constexpr double kBornImagTol = 1e-10;
inline constexpr double kProjectiveTol = 1e-9;

/// A measurement effect: Hermitian matrix a with 0 <= a <= I, a != 0.
/// All invariants are checked at construction; operations downstream can
/// assume they hold.
class Effect {
 public:
  explicit Effect(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

/// A finite POVM: d >= 2 effects of a common dimension summing to the
/// identity (max-entry norm, kCompletenessTol). Effects may repeat. The
/// outcome count d is independent of the Hilbert space dimension.
class Observable {
 public:
  explicit Observable(std::vector<Effect> effects);

  /// The atomic projective observable {|0><0|, ..., |d-1><d-1|}.
  static Observable standard_basis(int dim);

  int outcome_count() const { return static_cast<int>(effects_.size()); }
  int hilbert_dim() const { return effects_.front().dim(); }
  const Effect& effect(int i) const { return effects_[static_cast<std::size_t>(i)]; }
  const std::vector<Effect>& effects() const { return effects_; }

 private:
  std::vector<Effect> effects_;
};

/// A density operator: Hermitian, positive semidefinite, unit trace.
class State {
 public:
  explicit State(ComplexMatrix density);

  /// Normalizes the ket, then forms |psi><psi|. Rejects the zero vector.
  static State pure(const ComplexVector& ket);

  /// The completely random state I/d.
  static State completely_mixed(int dim);

  const ComplexMatrix& density() const { return density_; }
  int dim() const { return static_cast<int>(density_.rows()); }

 private:
  ComplexMatrix density_;
};

/// Convex mixture sum w_i rho_i; weights in [0, 1] summing to 1 within 1e-12.
State mix_states(const std::vector<State>& states, const std::vector<double>& weights);

/// The Born distribution (tr(rho A_0), ..., tr(rho A_{d-1})). Each trace must
/// be real within kBornImagTol; tiny boundary negatives are clamped by
/// ProbabilityVector construction.
ProbabilityVector born_distribution(const State& rho, const Observable& a);

/// Var(a, rho) = tr(rho a^2) - tr(rho a)^2. Nonnegative within 1e-12.
double effect_variance(const Effect& a, const State& rho);

/// Outcome-wise affine combination: effect j of the result is
/// sum_i w_i A_ij. All observables must share outcome count and dimension;
/// weights in (0, 1] summing to 1 within 1e-12.
Observable mix_observables(const std::vector<Observable>& obs,
                           const std::vector<double>& weights);

/// True iff every effect is idempotent (A_i^2 = A_i within kProjectiveTol).
bool is_projective(const Observable& a);

/// Projective with rank-one effects (tr A_i = 1 within kProjectiveTol).
bool is_atomic_projective(const Observable& a);

/// True iff the Born distribution of rho under a is uniform within kDistTol.
bool is_maximal_uncertainty_state(const State& rho, const Observable& a);

/// Builds rho = I/d + T from a Hermitian zero-diagonal perturbation T.
/// The result is maximally uncertain for the standard-basis atomic
/// observable by construction. Rejects T with nonzero diagonal or when
/// I/d + T is not positive semidefinite.
State make_maximal_uncertainty_state(int basis_dim, const ComplexMatrix& t);

/// Inverse of the above: returns T = rho - I/d. Requires every diagonal
/// entry of rho to be within kDistTol of 1/d.
ComplexMatrix decompose_maximal_uncertainty_state(const State& rho);

/// The qubit family [alpha, i sqrt(1-alpha^2)]: pure states that are
/// maximally uncertain for the {+,-} projective measurement, for every
/// alpha in [-1, 1].
State maximal_uncertainty_qubit_family(double alpha);

/// Full-support random density operator: rho = G G* / tr(G G*) with G of
/// i.i.d. standard complex Gaussian entries.
State random_state(int dim, Rng& rng);

/// Random Hermitian zero-diagonal T with Gaussian off-diagonals, rescaled by
/// 0.9 * (1/d) / |lambda_min(T)| when needed so that I/d + T stays positive
/// semidefinite. Always admissible for make_maximal_uncertainty_state.
ComplexMatrix random_zero_diagonal_hermitian(int dim, Rng& rng);

}  // namespace quncert
