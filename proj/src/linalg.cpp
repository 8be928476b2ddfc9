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

#include "quncert/linalg.hpp"

#include <cmath>
#include <string>

#include "quncert/errors.hpp"

namespace quncert {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(who) + ": matrix must be square and non-empty, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool all_finite(const ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

double max_abs_entry(const ComplexMatrix& m) {
  double mx = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) mx = std::max(mx, std::abs(m(i, j)));
  return mx;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "matmul");
  require_square(b, "matmul");
  if (a.rows() != b.rows()) {
    throw DimensionError("matmul: dimension mismatch, " + std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()));
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

Complex quadratic_form(const ComplexMatrix& m, const ComplexVector& v) {
  require_square(m, "quadratic_form");
  if (m.rows() != v.size()) {
    throw DimensionError("quadratic_form: matrix is " + std::to_string(m.rows()) +
                         "-dimensional but vector has length " + std::to_string(v.size()));
  }
  return v.dot(m * v);  // Eigen's dot conjugates the left argument
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_entry(m - m.adjoint()) <= tol;
}

double min_eigenvalue_hermitian(const ComplexMatrix& m) {
  require_square(m, "min_eigenvalue_hermitian");
  if (!is_hermitian(m)) {
    throw ValidationError("min_eigenvalue_hermitian: matrix is not Hermitian, max asymmetry " +
                          std::to_string(max_abs_entry(m - m.adjoint())));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("min_eigenvalue_hermitian: eigensolver failed to converge");
  }
  return solver.eigenvalues()(0);  // ascending order
}

}  // namespace quncert
