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

#include <Eigen/Dense>
#include <complex>

namespace quncert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Inputs arrive as JSON decimal literals and mixtures of them, so equality
// checks carry absolute tolerances (max-entry norm).
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigTol = 1e-10;

bool all_finite(const ComplexMatrix& m);
bool all_finite(const ComplexVector& v);

/// Largest entry modulus (0 for an empty matrix).
double max_abs_entry(const ComplexMatrix& m);

/// Checked product of two square matrices of equal dimension.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Sum of diagonal entries of a square matrix.
Complex trace(const ComplexMatrix& a);

/// <v| m |v>.
Complex quadratic_form(const ComplexMatrix& m, const ComplexVector& v);

/// True iff the max-entry distance between m and its adjoint is <= tol.
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Smallest eigenvalue of a Hermitian matrix, accurate to kEigTol.
/// Throws ValidationError when the input is not Hermitian.
double min_eigenvalue_hermitian(const ComplexMatrix& m);

}  // namespace quncert
