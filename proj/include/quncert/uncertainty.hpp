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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quncert/simplex.hpp"

namespace quncert {

/// Slack for inequality checks in the axiom suite. Absorbs rounding in
/// lambda*x + (1-lambda)*y without masking real violations (the control
/// counterexamples violate at magnitude ~1e-1).
inline constexpr double kAxiomTol = 1e-9;

/// Slack for the numeric audit run by the sum-form constructor.
inline constexpr double kAuditTol = 1e-9;

// The four builtin uncertainty functions. All map the simplex into [0, 1],
// are 1 exactly at the uniform distribution and 0 exactly at the vertices.

/// v(x) = d/(d-1) * (1 - sum x_i^2)
double variance_uncertainty(const ProbabilityVector& x);

/// e(x) = -1/ln(d) * sum x_i ln(x_i), with the limit convention 0*ln(0) = 0
double entropy_uncertainty(const ProbabilityVector& x);

/// g(x) = d/(d-1) * (1 - max x_i)
double geometric_uncertainty(const ProbabilityVector& x);

/// s(x) = 1/(d sin(pi/d)) * sum sin(pi x_i)
double sine_uncertainty(const ProbabilityVector& x);

/// A per-coordinate generator h: [0,1] -> [0,1] for sum-form uncertainty
/// functions f(x) = sum h(x_i). Construction requires h(0) = h(1) = 0
/// within 1e-12.
class GeneratorFunction {
 public:
  GeneratorFunction(std::function<double(double)> h, std::string description);

  double operator()(double alpha) const { return h_(alpha); }
  const std::string& description() const { return description_; }

 private:
  std::function<double(double)> h_;
  std::string description_;
};

// Generators whose sum forms reproduce the corresponding builtins.
GeneratorFunction variance_generator(int d);
GeneratorFunction entropy_generator(int d);
GeneratorFunction sine_generator(int d);

/// An uncertainty function of fixed arity d. Values are immutable and
/// evaluation is pure, so instances may be shared freely across threads.
class UncertaintyFunction {
 public:
  enum class Kind { variance, entropy, geometric, sine, sum_form, mixture, custom };

  static UncertaintyFunction variance(int d);
  static UncertaintyFunction entropy(int d);
  static UncertaintyFunction geometric(int d);
  static UncertaintyFunction sine(int d);

  /// Builds x -> sum h(x_i) after a numeric audit of the generator:
  /// h(0) = h(1) = 0, h > 0 at interior grid points, h(1/d) = 1/d, and
  /// midpoint concavity on a 101-point grid (kAuditTol slack). Rejects with
  /// the failed condition named. The global "sum = 1 only at uniform"
  /// property cannot be certified from finite samples and is not audited;
  /// violations surface in verify_axioms instead.
  static UncertaintyFunction sum_form(const GeneratorFunction& h, int d);

  /// Pointwise affine combination. Weights must lie in (0, 1] and sum to 1
  /// within 1e-12; evaluation sums terms in ascending component order.
  static UncertaintyFunction mixture(std::vector<UncertaintyFunction> parts,
                                     std::vector<double> weights);

  /// Unaudited wrapper for caller-supplied evaluators (test controls).
  static UncertaintyFunction custom(std::string name, int d,
                                    std::function<double(const ProbabilityVector&)> eval);

  double operator()(const ProbabilityVector& x) const;

  int arity() const { return arity_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  UncertaintyFunction(Kind kind, std::string name, int arity,
                      std::function<double(const ProbabilityVector&)> eval);

  Kind kind_;
  std::string name_;
  int arity_;
  std::function<double(const ProbabilityVector&)> eval_;
};

struct AxiomCheck {
  bool pass = true;
  double worst_violation = 0.0;
  std::vector<std::vector<double>> witness;  // offending vector(s) at the worst violation
};

/// Outcome of the randomized axiom suite. Failures are report content, not
/// errors. Deterministic for a given seed: each sample's stream is derived
/// from (seed, sample index), independent of evaluation order.
struct AxiomReport {
  AxiomCheck vanishes_at_certainty;  // f = 0 at the d vertices, f > 0 inside
  AxiomCheck one_at_uniform;         // f = 1 at uniform, f < 1 elsewhere
  AxiomCheck symmetry;               // f invariant under permutations
  AxiomCheck concavity;              // f(mix) >= mix of f
  AxiomCheck range;                  // 0 <= f <= 1 at every probed point

  bool all_pass() const {
    return vanishes_at_certainty.pass && one_at_uniform.pass && symmetry.pass &&
           concavity.pass && range.pass;
  }
};

/// Probes the vertices and the uniform point deterministically, then checks
/// `samples` random (vector, permutation, mixture) probes.
AxiomReport verify_axioms(const UncertaintyFunction& f, int samples, std::uint64_t seed);

/// n-point Jensen inequality f(sum w_i z_i) >= sum w_i f(z_i) on random
/// weights and vectors; true iff no violation beyond kAxiomTol.
bool verify_jensen(const UncertaintyFunction& f, int points, int trials, std::uint64_t seed);

/// Extra named functions the specifier grammar may resolve, keyed by name.
using FunctionRegistry = std::map<std::string, std::function<UncertaintyFunction(int)>>;

/// Parses the CLI function specifier grammar:
///   v | e | g | s | mix:w1*f1+w2*f2+...
/// e.g. "mix:0.5*v+0.5*e". Names in `extra` are also accepted.
UncertaintyFunction parse_function_spec(const std::string& spec, int d,
                                        const FunctionRegistry& extra = {});

}  // namespace quncert
