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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quncert/io.hpp"
#include "quncert/measures.hpp"
#include "test_utils.hpp"

using namespace quncert;
using namespace quncert::testing;

namespace {

struct Checker {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

std::vector<UncertaintyFunction> builtins(int d) {
  return {UncertaintyFunction::variance(d), UncertaintyFunction::entropy(d),
          UncertaintyFunction::geometric(d), UncertaintyFunction::sine(d)};
}

// ---- 1: worked values of the four functions at x, y, z --------------------

bool criterion_worked_values(Checker& check) {
  const ProbabilityVector x({0.5, 0.5});
  const ProbabilityVector y({1.0, 0.0});
  const ProbabilityVector z({2.0 / 3.0, 1.0 / 3.0});

  check.require(std::abs(variance_uncertainty(z) - 0.8889) <= 5e-4, "v(z) != 0.8889");
  check.require(std::abs(entropy_uncertainty(z) - 0.9184) <= 5e-4, "e(z) != 0.9184");
  check.require(std::abs(geometric_uncertainty(z) - 0.6667) <= 5e-4, "g(z) != 0.6667");
  check.require(std::abs(sine_uncertainty(z) - std::sqrt(3.0) / 2.0) <= 1e-12,
                "s(z) != sqrt(3)/2");
  for (const auto& f : builtins(2)) {
    check.require(std::abs(f(x) - 1.0) <= 1e-12, f.name() + "(x) != 1");
    check.require(std::abs(f(y)) <= 1e-12, f.name() + "(y) != 0");
  }
  return check.ok;
}

// ---- 2: Born distributions of the worked qubit pairs ----------------------

bool criterion_born(Checker& check) {
  const Observable sharp = sharp_qubit_observable();
  const Observable unsharp = unsharp_qubit_observable();
  const State psi = plus_state();
  const State mixed = State::completely_mixed(2);

  const ProbabilityVector p1 = born_distribution(psi, sharp);
  check.require(std::abs(p1[0] - 1.0) <= 1e-10 && std::abs(p1[1]) <= 1e-10,
                "P_psi under the sharp pair != (1, 0)");
  const ProbabilityVector p2 = born_distribution(psi, unsharp);
  check.require(
      std::abs(p2[0] - 2.0 / 3.0) <= 1e-10 && std::abs(p2[1] - 1.0 / 3.0) <= 1e-10,
      "P_psi under the unsharp pair != (2/3, 1/3)");
  for (const Observable* a : {&sharp, &unsharp}) {
    const ProbabilityVector p = born_distribution(mixed, *a);
    check.require(std::abs(p[0] - 0.5) <= 1e-10 && std::abs(p[1] - 0.5) <= 1e-10,
                  "P_rho != (1/2, 1/2)");
  }
  return check.ok;
}

// ---- 3: randomized axiom suite, builtins pass and controls fail -----------

double worst_failing_violation(const AxiomReport& report) {
  double worst = 0.0;
  for (const AxiomCheck* check :
       {&report.vanishes_at_certainty, &report.one_at_uniform, &report.symmetry,
        &report.concavity, &report.range}) {
    if (!check->pass) worst = std::max(worst, check->worst_violation);
  }
  return worst;
}

bool criterion_axiom_suite(Checker& check) {
  for (int d = 2; d <= 6; ++d) {
    for (const auto& f : builtins(d)) {
      const AxiomReport report = verify_axioms(f, 10000, 271828);
      check.require(report.all_pass(),
                    f.name() + " fails an axiom at d = " + std::to_string(d));
    }
  }

  const auto purity = UncertaintyFunction::custom(
      "purity", 3, [](const ProbabilityVector& p) {
        double acc = 0.0;
        for (int i = 0; i < p.size(); ++i) acc += p[i] * p[i];
        return acc;
      });
  const auto first = UncertaintyFunction::custom(
      "first", 3, [](const ProbabilityVector& p) { return p[0]; });
  for (const auto& control : {purity, first}) {
    const AxiomReport report = verify_axioms(control, 10000, 271828);
    check.require(!report.all_pass() && worst_failing_violation(report) > 1e-2,
                  control.name() + " should fail an axiom by more than 1e-2");
  }
  return check.ok;
}

// ---- 4: random affine mixtures of builtins stay uncertainty functions -----

bool criterion_affine_closure(Checker& check) {
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      Rng rng(mix_seed(314159, static_cast<std::uint64_t>(d * 1000 + trial)));
      const auto parts_pool = builtins(d);
      const int count = 2 + static_cast<int>(rng.uniform_index(3));
      std::vector<UncertaintyFunction> parts;
      std::vector<double> weights;
      double total = 0.0;
      for (int i = 0; i < count; ++i) {
        parts.push_back(parts_pool[rng.uniform_index(parts_pool.size())]);
        weights.push_back(rng.exponential());
        total += weights.back();
      }
      for (double& w : weights) w /= total;
      const auto mixture = UncertaintyFunction::mixture(parts, weights);
      const AxiomReport report = verify_axioms(mixture, 1000, mix_seed(1618, trial));
      check.require(report.all_pass(), "mixture " + mixture.name() + " fails at d = " +
                                           std::to_string(d));
    }
  }
  return check.ok;
}

// ---- 5: sum-form constructor reproduces the builtins ----------------------

bool criterion_sum_form(Checker& check) {
  for (int d = 2; d <= 6; ++d) {
    const UncertaintyFunction from_generator[] = {
        UncertaintyFunction::sum_form(variance_generator(d), d),
        UncertaintyFunction::sum_form(entropy_generator(d), d),
        UncertaintyFunction::sum_form(sine_generator(d), d)};
    const UncertaintyFunction direct[] = {UncertaintyFunction::variance(d),
                                          UncertaintyFunction::entropy(d),
                                          UncertaintyFunction::sine(d)};
    for (int trial = 0; trial < 1000; ++trial) {
      Rng rng(mix_seed(577215, static_cast<std::uint64_t>(d * 10000 + trial)));
      const ProbabilityVector p = sample_simplex(d, rng);
      for (int k = 0; k < 3; ++k) {
        if (std::abs(from_generator[k](p) - direct[k](p)) > 1e-12) {
          check.require(false, "sum form deviates from " + direct[k].name() + " at d = " +
                                   std::to_string(d));
          return false;
        }
      }
    }
  }
  return check.ok;
}

// ---- 6: concavity of the measure in the state, plus boundary cases --------

bool criterion_measure_concavity(Checker& check) {
  const Observable sharp = sharp_qubit_observable();
  Rng povm_rng(141421);
  const Observable random3 = random_povm(3, 3, povm_rng);

  for (const auto& f : builtins(2)) {
    check.require(measure_concavity_check(UncertaintyMeasure(f, sharp), 1000, 173205),
                  f.name() + " concavity fails under the sharp pair");
  }
  for (const auto& f : builtins(3)) {
    check.require(measure_concavity_check(UncertaintyMeasure(f, random3), 1000, 173205),
                  f.name() + " concavity fails under a random POVM");
  }

  // boundary characterizations on constructed states
  const State mixed = State::completely_mixed(2);
  const State psi = plus_state();
  for (const auto& f : builtins(2)) {
    const UncertaintyMeasure m(f, sharp);
    check.require(std::abs(measure(m, mixed) - 1.0) <= 1e-12,
                  f.name() + " != 1 on the uniform Born distribution");
    check.require(measure(m, psi) <= 1e-9, f.name() + " != 0 on a certain outcome");
    const UncertaintyMeasure mu(f, unsharp_qubit_observable());
    const double interior = measure(mu, psi);
    check.require(interior > 1e-3 && interior < 1.0 - 1e-3,
                  f.name() + " not strictly interior at (2/3, 1/3)");
  }
  check.require(is_maximal_uncertainty_state(mixed, sharp), "I/2 not maximally uncertain");
  check.require(born_distribution(psi, sharp).max_component() >= 1.0 - kDistTol,
                "psi not maximally certain under the sharp pair");
  return check.ok;
}

// ---- 7: perturbation roundtrip for standard-basis maximal uncertainty -----

bool criterion_perturbation_roundtrip(Checker& check) {
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;
    Rng rng(mix_seed(662607, static_cast<std::uint64_t>(trial)));
    const ComplexMatrix t = random_zero_diagonal_hermitian(d, rng);
    const State rho = make_maximal_uncertainty_state(d, t);

    const ProbabilityVector p = born_distribution(rho, Observable::standard_basis(d));
    for (int i = 0; i < d; ++i) {
      check.require(std::abs(p[i] - 1.0 / d) <= 1e-10, "Born distribution not uniform");
    }
    check.require(max_abs_entry(decompose_maximal_uncertainty_state(rho) - t) <= 1e-12,
                  "decomposition does not recover the perturbation");
  }

  // diagonal maximal-uncertainty states are exactly I/d
  for (int d = 2; d <= 5; ++d) {
    const State uniform = State::completely_mixed(d);
    check.require(is_maximal_uncertainty_state(uniform, Observable::standard_basis(d)),
                  "I/d not maximally uncertain");
    check.require(max_abs_entry(decompose_maximal_uncertainty_state(uniform)) <= 1e-12,
                  "diagonal maximal-uncertainty state differs from I/d");
    std::vector<double> skew(static_cast<std::size_t>(d), (1.0 - 0.4) / (d - 1));
    skew[0] = 0.4;
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) diag(i, i) = skew[static_cast<std::size_t>(i)];
    check.require(!is_maximal_uncertainty_state(State(diag), Observable::standard_basis(d)),
                  "skewed diagonal state wrongly classified as maximally uncertain");
  }
  return check.ok;
}

// ---- 8: the one-parameter qubit family stays maximally uncertain ----------

bool criterion_alpha_family(Checker& check) {
  const Observable sharp = sharp_qubit_observable();
  for (int k = 0; k < 50; ++k) {
    const double alpha = -1.0 + 2.0 * k / 49.0;
    check.require(is_maximal_uncertainty_state(maximal_uncertainty_qubit_family(alpha), sharp),
                  "family member at alpha = " + std::to_string(alpha) + " fails");
  }
  return check.ok;
}

// ---- 9: variance decomposition agreement on projective observables --------

bool criterion_variance_decomposition(Checker& check) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(mix_seed(301029, static_cast<std::uint64_t>(trial)));
    Observable a = [&]() {
      switch (trial % 4) {
        case 0: return random_atomic_projective(2, rng);
        case 1: return random_atomic_projective(3, rng);
        case 2: return random_projective(3, 2, rng);
        default: return random_projective(2, 1, rng);
      }
    }();
    const State rho = random_state(a.hilbert_dim(), rng);
    const auto [lhs, rhs] = variance_measure_decomposition(a, rho);
    check.require(std::abs(lhs - rhs) <= 1e-10, "decomposition routes disagree by " +
                                                    std::to_string(std::abs(lhs - rhs)));
  }
  return check.ok;
}

// ---- 10: Jensen gap for mixtures of observables ----------------------------

bool criterion_observable_mixture_jensen(Checker& check) {
  for (const auto& f : builtins(3)) {
    double largest_gap = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      Rng rng(mix_seed(693147, static_cast<std::uint64_t>(trial)));
      const int count = 2 + static_cast<int>(rng.uniform_index(2));
      std::vector<Observable> parts;
      std::vector<double> weights;
      double total = 0.0;
      for (int i = 0; i < count; ++i) {
        parts.push_back(random_povm(2, 3, rng));
        weights.push_back(rng.exponential());
        total += weights.back();
      }
      for (double& w : weights) w /= total;
      const State rho = random_state(2, rng);

      const double lhs = f(born_distribution(rho, mix_observables(parts, weights)));
      double rhs = 0.0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        rhs += weights[j] * f(born_distribution(rho, parts[j]));
      }
      check.require(lhs >= rhs - 1e-9, f.name() + " violates the mixture inequality");
      largest_gap = std::max(largest_gap, lhs - rhs);
    }
    check.require(largest_gap > 1e-3,
                  f.name() + " shows no strict gap; affine equality would be wrong");
  }
  return check.ok;
}

// ---- 11: CLI golden output and axiom exit code ------------------------------

bool criterion_cli(Checker& check) {
  const std::string cli = QUNCERT_CLI_PATH;
  const std::string golden_path = std::string(QUNCERT_GOLDEN_DIR) + "/examples.txt";

  FILE* pipe = popen((cli + " examples 2>/dev/null").c_str(), "r");
  check.require(pipe != nullptr, "cannot launch the CLI");
  if (!pipe) return false;
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, n);
  check.require(WEXITSTATUS(pclose(pipe)) == 0, "examples exited nonzero");

  std::ifstream golden_file(golden_path, std::ios::binary);
  std::ostringstream golden;
  golden << golden_file.rdbuf();
  check.require(golden_file.good() && output == golden.str(),
                "examples output differs from the golden file");

  const int status = std::system((cli + " axioms -f e -d 3 >/dev/null 2>&1").c_str());
  check.require(WEXITSTATUS(status) == 0, "axioms -f e -d 3 exited nonzero");
  return check.ok;
}

struct Criterion {
  std::string name;
  std::function<bool(Checker&)> run;
  double time_limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked values of v, e, g, s at x, y, z", criterion_worked_values, 1.0},
      {"Born distributions of the sharp and unsharp qubit pairs", criterion_born, 1.0},
      {"axiom suite: builtins pass, controls fail (d = 2..6)", criterion_axiom_suite, 30.0},
      {"random affine mixtures remain uncertainty functions", criterion_affine_closure, 30.0},
      {"sum-form constructor reproduces the builtins to 1e-12", criterion_sum_form, 0.0},
      {"measure concavity and boundary characterization", criterion_measure_concavity, 0.0},
      {"zero-diagonal perturbation roundtrip (100 seeds)", criterion_perturbation_roundtrip,
       0.0},
      {"qubit alpha family is maximally uncertain (50 points)", criterion_alpha_family, 0.0},
      {"variance decomposition routes agree to 1e-10", criterion_variance_decomposition, 0.0},
      {"observable-mixture Jensen inequality with strict gap", criterion_observable_mixture_jensen,
       0.0},
      {"CLI golden table and axiom exit code", criterion_cli, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].time_limit_seconds > 0 && elapsed > criteria[i].time_limit_seconds) {
      ok = false;
      check.note = "time limit exceeded";
    }
    ok = ok && check.ok;
    if (!ok) ++failures;
    std::printf("[%s] %2zu. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), elapsed, check.note.empty() ? "" : " -- ",
                check.note.c_str());
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
