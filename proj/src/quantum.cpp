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

#include "quncert/quantum.hpp"

#include <cmath>
#include <string>

#include "quncert/errors.hpp"

namespace quncert {

namespace {

void require_valid_operator(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(std::string(who) + ": matrix must be square and non-empty, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    throw ValidationError(std::string(who) + ": matrix has non-finite entries");
  }
  if (!is_hermitian(m)) {
    throw ValidationError(std::string(who) + ": matrix is not Hermitian, max asymmetry " +
                          std::to_string(max_abs_entry(m - m.adjoint())) + " exceeds 1e-10");
  }
}

void check_mixture_weights(const std::vector<double>& weights, std::size_t count,
                           const char* who, bool allow_zero) {
  if (weights.size() != count) {
    throw ValidationError(std::string(who) + ": " + std::to_string(count) + " inputs but " +
                          std::to_string(weights.size()) + " weights");
  }
  double total = 0.0;
  for (double w : weights) {
    const bool ok = allow_zero ? (w >= 0.0 && w <= 1.0) : (w > 0.0 && w <= 1.0);
    if (!ok) {
      throw ValidationError(std::string(who) + ": weight " + std::to_string(w) +
                            " outside " + (allow_zero ? "[0, 1]" : "(0, 1]"));
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError(std::string(who) + ": weights sum to " + std::to_string(total) +
                          ", more than 1e-12 away from 1");
  }
}

}  // namespace

Effect::Effect(ComplexMatrix m) : matrix_(std::move(m)) {
  require_valid_operator(matrix_, "effect");
  if (max_abs_entry(matrix_) <= kZeroEffectTol) {
    throw ValidationError("effect: the zero matrix is not an effect (max entry modulus " +
                          std::to_string(max_abs_entry(matrix_)) + ")");
  }
  const double lo = min_eigenvalue_hermitian(matrix_);
  if (lo < -kPsdTol) {
    throw ValidationError("effect: not positive semidefinite, min eigenvalue " +
                          std::to_string(lo));
  }
  const ComplexMatrix complement =
      ComplexMatrix::Identity(matrix_.rows(), matrix_.cols()) - matrix_;
  const double hi = min_eigenvalue_hermitian(complement);
  if (hi < -kPsdTol) {
    throw ValidationError("effect: exceeds the identity, min eigenvalue of I - a is " +
                          std::to_string(hi));
  }
}

Observable::Observable(std::vector<Effect> effects) : effects_(std::move(effects)) {
  if (effects_.size() < 2) {
    throw ValidationError("observable: needs at least 2 effects, got " +
                          std::to_string(effects_.size()));
  }
  const int n = effects_.front().dim();
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (const Effect& effect : effects_) {
    if (effect.dim() != n) {
      throw DimensionError("observable: effect dimensions differ, " + std::to_string(n) +
                           " vs " + std::to_string(effect.dim()));
    }
    total += effect.matrix();
  }
  const double gap = max_abs_entry(total - ComplexMatrix::Identity(n, n));
  if (gap > kCompletenessTol) {
    throw ValidationError("observable: effects do not sum to the identity, max deviation " +
                          std::to_string(gap) + " exceeds 1e-9");
  }
}

Observable Observable::standard_basis(int dim) {
  if (dim < 2) {
    throw ValidationError("standard_basis: dimension must be >= 2, got " + std::to_string(dim));
  }
  std::vector<Effect> effects;
  effects.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    ComplexMatrix projector = ComplexMatrix::Zero(dim, dim);
    projector(i, i) = 1.0;
    effects.emplace_back(std::move(projector));
  }
  return Observable(std::move(effects));
}

State::State(ComplexMatrix density) : density_(std::move(density)) {
  require_valid_operator(density_, "state");
  const double lo = min_eigenvalue_hermitian(density_);
  if (lo < -kPsdTol) {
    throw ValidationError("state: not positive semidefinite, min eigenvalue " +
                          std::to_string(lo));
  }
  const double tr = trace(density_).real();
  if (std::abs(tr - 1.0) > 1e-9) {
    throw ValidationError("state: trace is " + std::to_string(tr) +
                          ", more than 1e-9 away from 1");
  }
}

State State::pure(const ComplexVector& ket) {
  if (ket.size() == 0 || !all_finite(ket)) {
    throw ValidationError("pure state: ket must be non-empty and finite");
  }
  const double norm = ket.norm();
  if (norm == 0.0) throw ValidationError("pure state: the zero vector has no direction");
  const ComplexVector unit = ket / norm;
  return State(unit * unit.adjoint());
}

State State::completely_mixed(int dim) {
  if (dim < 1) throw ValidationError("completely_mixed: dimension must be positive");
  return State(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

State mix_states(const std::vector<State>& states, const std::vector<double>& weights) {
  if (states.empty()) throw ValidationError("mix_states: state list is empty");
  check_mixture_weights(weights, states.size(), "mix_states", /*allow_zero=*/true);
  const int n = states.front().dim();
  ComplexMatrix mixed = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != n) {
      throw DimensionError("mix_states: state dimensions differ, " + std::to_string(n) +
                           " vs " + std::to_string(states[i].dim()));
    }
    mixed += weights[i] * states[i].density();
  }
  return State(std::move(mixed));
}

ProbabilityVector born_distribution(const State& rho, const Observable& a) {
  if (rho.dim() != a.hilbert_dim()) {
    throw DimensionError("born_distribution: state dimension " + std::to_string(rho.dim()) +
                         " does not match observable dimension " +
                         std::to_string(a.hilbert_dim()));
  }
  std::vector<double> probs(static_cast<std::size_t>(a.outcome_count()));
  for (int i = 0; i < a.outcome_count(); ++i) {
    const Complex p = trace(matmul(rho.density(), a.effect(i).matrix()));
    if (std::abs(p.imag()) > kBornImagTol) {
      throw ValidationError("born_distribution: tr(rho A_" + std::to_string(i) +
                            ") has imaginary part " + std::to_string(p.imag()));
    }
    probs[static_cast<std::size_t>(i)] = p.real();
  }
  return ProbabilityVector(std::move(probs));
}

double effect_variance(const Effect& a, const State& rho) {
  if (a.dim() != rho.dim()) {
    throw DimensionError("effect_variance: effect dimension " + std::to_string(a.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  const double mean = trace(matmul(rho.density(), a.matrix())).real();
  const double second = trace(matmul(rho.density(), matmul(a.matrix(), a.matrix()))).real();
  return second - mean * mean;
}

Observable mix_observables(const std::vector<Observable>& obs,
                           const std::vector<double>& weights) {
  if (obs.empty()) throw ValidationError("mix_observables: observable list is empty");
  check_mixture_weights(weights, obs.size(), "mix_observables", /*allow_zero=*/false);
  const int d = obs.front().outcome_count();
  const int n = obs.front().hilbert_dim();
  for (const Observable& b : obs) {
    if (b.outcome_count() != d || b.hilbert_dim() != n) {
      throw DimensionError("mix_observables: all observables must share outcome count and "
                           "dimension");
    }
  }
  std::vector<Effect> effects;
  effects.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    ComplexMatrix mixed = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < obs.size(); ++i) mixed += weights[i] * obs[i].effect(j).matrix();
    effects.emplace_back(std::move(mixed));
  }
  return Observable(std::move(effects));
}

bool is_projective(const Observable& a) {
  for (const Effect& effect : a.effects()) {
    const ComplexMatrix& m = effect.matrix();
    if (max_abs_entry(matmul(m, m) - m) > kProjectiveTol) return false;
  }
  return true;
}

bool is_atomic_projective(const Observable& a) {
  if (!is_projective(a)) return false;
  for (const Effect& effect : a.effects()) {
    if (std::abs(trace(effect.matrix()).real() - 1.0) > kProjectiveTol) return false;
  }
  return true;
}

bool is_maximal_uncertainty_state(const State& rho, const Observable& a) {
  return is_maximal_uncertainty(born_distribution(rho, a));
}

State make_maximal_uncertainty_state(int basis_dim, const ComplexMatrix& t) {
  if (basis_dim < 2) {
    throw ValidationError("make_maximal_uncertainty_state: dimension must be >= 2");
  }
  if (t.rows() != basis_dim || t.cols() != basis_dim) {
    throw DimensionError("make_maximal_uncertainty_state: T is " + std::to_string(t.rows()) +
                         "x" + std::to_string(t.cols()) + ", expected " +
                         std::to_string(basis_dim) + "x" + std::to_string(basis_dim));
  }
  require_valid_operator(t, "make_maximal_uncertainty_state");
  for (int r = 0; r < basis_dim; ++r) {
    if (std::abs(t(r, r)) > 1e-10) {
      throw ValidationError("make_maximal_uncertainty_state: diagonal entry " +
                            std::to_string(r) + " of T has modulus " +
                            std::to_string(std::abs(t(r, r))) + ", must be 0");
    }
  }
  const ComplexMatrix rho =
      ComplexMatrix::Identity(basis_dim, basis_dim) / static_cast<double>(basis_dim) + t;
  const double lo = min_eigenvalue_hermitian(rho);
  if (lo < -kPsdTol) {
    throw ValidationError("make_maximal_uncertainty_state: I/d + T is not positive "
                          "semidefinite, min eigenvalue " + std::to_string(lo) +
                          " (T too large)");
  }
  return State(rho);
}

ComplexMatrix decompose_maximal_uncertainty_state(const State& rho) {
  const int d = rho.dim();
  for (int r = 0; r < d; ++r) {
    const double gap = std::abs(rho.density()(r, r).real() - 1.0 / d);
    if (gap > kDistTol) {
      throw ValidationError("decompose_maximal_uncertainty_state: diagonal entry " +
                            std::to_string(r) + " is " + std::to_string(gap) +
                            " away from 1/d; state is not maximally uncertain in the "
                            "standard basis");
    }
  }
  return rho.density() - ComplexMatrix::Identity(d, d) / static_cast<double>(d);
}

State maximal_uncertainty_qubit_family(double alpha) {
  if (!(std::abs(alpha) <= 1.0)) {
    throw ValidationError("maximal_uncertainty_qubit_family: |alpha| = " + std::to_string(std::abs(alpha)) +
                          " exceeds 1");
  }
  ComplexVector ket(2);
  ket(0) = Complex(alpha, 0.0);
  ket(1) = Complex(0.0, std::sqrt(1.0 - alpha * alpha));
  return State::pure(ket);
}

State random_state(int dim, Rng& rng) {
  if (dim < 1) throw ValidationError("random_state: dimension must be positive");
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix rho = g * g.adjoint();
  rho /= trace(rho).real();
  // symmetrize away the last-ulp asymmetry before validation
  rho = 0.5 * (rho + rho.adjoint().eval());
  return State(std::move(rho));
}

ComplexMatrix random_zero_diagonal_hermitian(int dim, Rng& rng) {
  if (dim < 2) {
    throw ValidationError("random_zero_diagonal_hermitian: dimension must be >= 2");
  }
  ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const Complex z(rng.gaussian(), rng.gaussian());
      t(i, j) = z;
      t(j, i) = std::conj(z);
    }
  }
  const double lo = min_eigenvalue_hermitian(t);
  if (lo < -1.0 / dim) t *= 0.9 * (1.0 / dim) / (-lo);
  return t;
}

}  // namespace quncert
