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

#include <utility>
#include <vector>

#include "quncert/quantum.hpp"
#include "quncert/rng.hpp"

namespace quncert::testing {

// The two-outcome qubit measurements used throughout: a sharp rank-one
// projective pair and an unsharp smeared version of it.
inline Observable sharp_qubit_observable() {
  ComplexMatrix a0(2, 2), a1(2, 2);
  a0 << 0.5, 0.5, 0.5, 0.5;
  a1 << 0.5, -0.5, -0.5, 0.5;
  return Observable({Effect(a0), Effect(a1)});
}

inline Observable unsharp_qubit_observable() {
  ComplexMatrix a0(2, 2), a1(2, 2);
  a0 << 0.5, 1.0 / 6.0, 1.0 / 6.0, 0.5;
  a1 << 0.5, -1.0 / 6.0, -1.0 / 6.0, 0.5;
  return Observable({Effect(a0), Effect(a1)});
}

// psi = (|0> + |1>)/sqrt(2)
inline State plus_state() {
  ComplexVector ket(2);
  ket << Complex(1, 0), Complex(1, 0);
  return State::pure(ket);
}

inline ComplexMatrix random_matrix(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

inline ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = random_matrix(n, rng);
  return 0.5 * (g + g.adjoint().eval());
}

inline ComplexVector random_vector(int n, Rng& rng) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  return v;
}

// Haar-ish random unitary via QR of a Ginibre matrix; orthonormal columns
// are all the tests need.
inline ComplexMatrix random_unitary(int n, Rng& rng) {
  return Eigen::HouseholderQR<ComplexMatrix>(random_matrix(n, rng)).householderQ();
}

// Atomic projective observable from the columns of a random unitary.
inline Observable random_atomic_projective(int n, Rng& rng) {
  const ComplexMatrix u = random_unitary(n, rng);
  std::vector<Effect> effects;
  for (int i = 0; i < n; ++i) {
    const ComplexVector col = u.col(i);
    effects.emplace_back(col * col.adjoint());
  }
  return Observable(std::move(effects));
}

// Projective but generally non-atomic: groups the first `rank` columns into
// one projector and the rest into its complement.
inline Observable random_projective(int n, int rank, Rng& rng) {
  const ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < rank; ++i) {
    const ComplexVector col = u.col(i);
    p += col * col.adjoint();
  }
  p = 0.5 * (p + p.adjoint().eval());
  ComplexMatrix q = ComplexMatrix::Identity(n, n) - p;
  return Observable({Effect(std::move(p)), Effect(std::move(q))});
}

// Random full-rank POVM: A_i = S^{-1/2} G_i G_i* S^{-1/2} with S the sum of
// the Wishart pieces, so completeness holds by construction.
inline Observable random_povm(int n, int outcomes, Rng& rng) {
  std::vector<ComplexMatrix> pieces;
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < outcomes; ++i) {
    const ComplexMatrix g = random_matrix(n, rng);
    pieces.push_back(g * g.adjoint());
    total += pieces.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total);
  const ComplexMatrix whiten = solver.operatorInverseSqrt();
  std::vector<Effect> effects;
  for (auto& piece : pieces) {
    ComplexMatrix a = whiten * piece * whiten;
    a = 0.5 * (a + a.adjoint().eval());
    effects.emplace_back(std::move(a));
  }
  return Observable(std::move(effects));
}

}  // namespace quncert::testing
