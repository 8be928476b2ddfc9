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

#include <string>
#include <utility>
#include <vector>

#include "quncert/quantum.hpp"
#include "quncert/uncertainty.hpp"

namespace quncert {

/// The composed uncertainty of a state: an uncertainty function applied to
/// the Born distribution of an observable. The function arity must equal
/// the observable's outcome count.
class UncertaintyMeasure {
 public:
  UncertaintyMeasure(UncertaintyFunction f, Observable a);

  const UncertaintyFunction& function() const { return f_; }
  const Observable& observable() const { return a_; }

 private:
  UncertaintyFunction f_;
  Observable a_;
};

/// f(P_rho^A), clamped into [0, 1] for reporting.
double measure(const UncertaintyMeasure& m, const State& rho);

/// Samples random state pairs and mixing weights; true iff
/// U(mix) >= mix of U holds for every trial within kAxiomTol.
bool measure_concavity_check(const UncertaintyMeasure& m, int trials, std::uint64_t seed);

/// The two routes to the variance measure of a projective observable:
/// v applied to the Born distribution, and the rescaled sum of per-effect
/// variances. They agree when the observable is projective; callers assert
/// the equality.
struct VarianceDecomposition {
  double from_distribution;      // v(P_rho^A)
  double from_effect_variances;  // d/(d-1) * sum Var(A_i, rho)
};

/// Throws ValidationError for non-projective observables: the identity
/// relies on idempotent effects and does not hold in general.
VarianceDecomposition variance_measure_decomposition(const Observable& a, const State& rho);

/// The measure (sum lambda_i f_i, sum mu_j B_j): an affine mixture of
/// functions paired with an outcome-wise mixture of observables. Note that
/// in the state this evaluates the function mixture at the mixed Born
/// distribution, which by concavity dominates (but in general exceeds) the
/// doubly-mixed combination of the individual measures.
UncertaintyMeasure mixed_measure(std::vector<UncertaintyFunction> fs,
                                 const std::vector<double>& fweights,
                                 const std::vector<Observable>& obs,
                                 const std::vector<double>& oweights);

struct DiscriminationRow {
  std::string label;
  ProbabilityVector distribution;
  std::vector<double> values;  // one entry per requested function, clamped to [0, 1]
};

struct PairwiseGap {
  std::string first;
  std::string second;
  double gap;  // max over outcomes of |P_1(i) - P_2(i)|
};

/// Side-by-side comparison of several states under one observable: the Born
/// distribution and the requested uncertainty values per state, plus the
/// max-component distribution gap for every pair. A gap of 0 means the
/// observable does not distinguish the pair.
struct DiscriminationReport {
  std::vector<std::string> function_names;
  std::vector<DiscriminationRow> rows;
  std::vector<PairwiseGap> gaps;
};

DiscriminationReport discriminate(const std::vector<std::pair<std::string, State>>& states,
                                  const Observable& a,
                                  const std::vector<UncertaintyFunction>& fs);

/// Aligned plain-text rendering: label, P(0..d-1), one column per function.
std::string format_table(const DiscriminationReport& report);

}  // namespace quncert
