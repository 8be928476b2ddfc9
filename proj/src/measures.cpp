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

#include "quncert/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "quncert/errors.hpp"

namespace quncert {

UncertaintyMeasure::UncertaintyMeasure(UncertaintyFunction f, Observable a)
    : f_(std::move(f)), a_(std::move(a)) {
  if (f_.arity() != a_.outcome_count()) {
    throw DimensionError("uncertainty measure: function arity " + std::to_string(f_.arity()) +
                         " does not match the observable's " +
                         std::to_string(a_.outcome_count()) + " outcomes");
  }
}

double measure(const UncertaintyMeasure& m, const State& rho) {
  return std::clamp(m.function()(born_distribution(rho, m.observable())), 0.0, 1.0);
}

bool measure_concavity_check(const UncertaintyMeasure& m, int trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("measure_concavity_check: trials must be >= 1");
  const int n = m.observable().hilbert_dim();
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const State rho1 = random_state(n, rng);
    const State rho2 = random_state(n, rng);
    const double lambda = rng.uniform01();
    const State mixed = mix_states({rho1, rho2}, {lambda, 1.0 - lambda});
    const double lhs = measure(m, mixed);
    const double rhs = lambda * measure(m, rho1) + (1.0 - lambda) * measure(m, rho2);
    if (lhs < rhs - kAxiomTol) return false;
  }
  return true;
}

VarianceDecomposition variance_measure_decomposition(const Observable& a, const State& rho) {
  if (!is_projective(a)) {
    throw ValidationError("variance_measure_decomposition: observable is not projective; "
                          "the identity requires idempotent effects");
  }
  const int d = a.outcome_count();
  const UncertaintyMeasure vm(UncertaintyFunction::variance(d), a);
  double var_sum = 0.0;
  for (int i = 0; i < d; ++i) var_sum += effect_variance(a.effect(i), rho);
  return VarianceDecomposition{measure(vm, rho), static_cast<double>(d) / (d - 1) * var_sum};
}

UncertaintyMeasure mixed_measure(std::vector<UncertaintyFunction> fs,
                                 const std::vector<double>& fweights,
                                 const std::vector<Observable>& obs,
                                 const std::vector<double>& oweights) {
  return UncertaintyMeasure(UncertaintyFunction::mixture(std::move(fs), fweights),
                            mix_observables(obs, oweights));
}

DiscriminationReport discriminate(const std::vector<std::pair<std::string, State>>& states,
                                  const Observable& a,
                                  const std::vector<UncertaintyFunction>& fs) {
  if (states.empty()) throw ValidationError("discriminate: no states given");
  DiscriminationReport report;
  for (const auto& f : fs) {
    if (f.arity() != a.outcome_count()) {
      throw DimensionError("discriminate: function '" + f.name() + "' has arity " +
                           std::to_string(f.arity()) + " but the observable has " +
                           std::to_string(a.outcome_count()) + " outcomes");
    }
    report.function_names.push_back(f.name());
  }
  for (const auto& [label, rho] : states) {
    ProbabilityVector dist = born_distribution(rho, a);
    std::vector<double> values;
    values.reserve(fs.size());
    for (const auto& f : fs) values.push_back(std::clamp(f(dist), 0.0, 1.0));
    report.rows.push_back(DiscriminationRow{label, std::move(dist), std::move(values)});
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      double gap = 0.0;
      for (int k = 0; k < a.outcome_count(); ++k) {
        gap = std::max(gap,
                       std::abs(report.rows[i].distribution[k] - report.rows[j].distribution[k]));
      }
      report.gaps.push_back(PairwiseGap{report.rows[i].label, report.rows[j].label, gap});
    }
  }
  return report;
}

std::string format_table(const DiscriminationReport& report) {
  const int d = report.rows.empty() ? 0 : report.rows.front().distribution.size();
  std::size_t label_width = 5;
  for (const auto& row : report.rows) label_width = std::max(label_width, row.label.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << "state";
  for (int k = 0; k < d; ++k) {
    out << std::right << std::setw(9) << ("P(" + std::to_string(k) + ")");
  }
  for (const auto& name : report.function_names) {
    out << std::right << std::setw(std::max<int>(9, static_cast<int>(name.size()) + 2)) << name;
  }
  out << "\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& row : report.rows) {
    out << std::left << std::setw(static_cast<int>(label_width)) << row.label;
    for (int k = 0; k < d; ++k) out << std::right << std::setw(9) << row.distribution[k];
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      const auto& name = report.function_names[c];
      out << std::right << std::setw(std::max<int>(9, static_cast<int>(name.size()) + 2))
          << row.values[c];
    }
    out << "\n";
  }
  for (const auto& gap : report.gaps) {
    out << "gap(" << gap.first << ", " << gap.second << ") = " << gap.gap << "\n";
  }
  return out.str();
}

}  // namespace quncert
