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

#include "quncert/uncertainty.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "quncert/errors.hpp"

namespace quncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sampled points this far (inf-norm) from a vertex or from uniform count as
// interior for the strict-inequality sides of axioms (2.3)/(2.4).
constexpr double kInteriorMargin = 1e-6;

double inf_distance_to_uniform(const ProbabilityVector& x) {
  const double u = 1.0 / x.size();
  double dist = 0.0;
  for (int i = 0; i < x.size(); ++i) dist = std::max(dist, std::abs(x[i] - u));
  return dist;
}

void record(AxiomCheck& check, bool violated, double magnitude,
            std::vector<std::vector<double>> witness) {
  if (!violated) return;
  if (check.pass || magnitude > check.worst_violation) {
    check.worst_violation = magnitude;
    check.witness = std::move(witness);
  }
  check.pass = false;
}

void check_range(AxiomCheck& range, double value, const ProbabilityVector& point) {
  const double excess = std::max(-value, value - 1.0);
  record(range, excess > kAxiomTol, std::max(excess, 0.0), {point.values()});
}

}  // namespace

double variance_uncertainty(const ProbabilityVector& x) {
  const int d = x.size();
  double sum_sq = 0.0;
  for (int i = 0; i < d; ++i) sum_sq += x[i] * x[i];
  return static_cast<double>(d) / (d - 1) * (1.0 - sum_sq);
}

double entropy_uncertainty(const ProbabilityVector& x) {
  const int d = x.size();
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    if (x[i] > 0.0) acc += x[i] * std::log(x[i]);
  }
  if (acc == 0.0) return 0.0;  // avoid -0.0 at the vertices
  return -acc / std::log(static_cast<double>(d));
}

double geometric_uncertainty(const ProbabilityVector& x) {
  const int d = x.size();
  return static_cast<double>(d) / (d - 1) * (1.0 - x.max_component());
}

double sine_uncertainty(const ProbabilityVector& x) {
  const int d = x.size();
  double acc = 0.0;
  for (int i = 0; i < d; ++i) acc += std::sin(kPi * x[i]);
  return acc / (d * std::sin(kPi / d));
}

GeneratorFunction::GeneratorFunction(std::function<double(double)> h, std::string description)
    : h_(std::move(h)), description_(std::move(description)) {
  if (!h_) throw ValidationError("generator function: evaluator is empty");
  for (double endpoint : {0.0, 1.0}) {
    const double value = h_(endpoint);
    if (!(std::abs(value) <= 1e-12)) {
      throw ValidationError("generator function '" + description_ + "': h(" +
                            std::to_string(endpoint) + ") = " + std::to_string(value) +
                            ", must vanish at the endpoints");
    }
  }
}

GeneratorFunction variance_generator(int d) {
  const double scale = static_cast<double>(d) / (d - 1);
  return GeneratorFunction([scale](double a) { return scale * (a - a * a); },
                           "h(a) = d/(d-1) (a - a^2)");
}

GeneratorFunction entropy_generator(int d) {
  const double scale = 1.0 / std::log(static_cast<double>(d));
  return GeneratorFunction([scale](double a) { return a > 0.0 ? -scale * a * std::log(a) : 0.0; },
                           "h(a) = -a ln(a) / ln(d)");
}

GeneratorFunction sine_generator(int d) {
  const double scale = 1.0 / (d * std::sin(kPi / d));
  return GeneratorFunction([scale](double a) { return scale * std::sin(kPi * a); },
                           "h(a) = sin(pi a) / (d sin(pi/d))");
}

UncertaintyFunction::UncertaintyFunction(Kind kind, std::string name, int arity,
                                         std::function<double(const ProbabilityVector&)> eval)
    : kind_(kind), name_(std::move(name)), arity_(arity), eval_(std::move(eval)) {
  if (arity_ < 2) {
    throw ValidationError("uncertainty function '" + name_ + "': arity must be >= 2, got " +
                          std::to_string(arity_));
  }
}

double UncertaintyFunction::operator()(const ProbabilityVector& x) const {
  if (x.size() != arity_) {
    throw DimensionError("uncertainty function '" + name_ + "' has arity " +
                         std::to_string(arity_) + " but was applied to a " +
                         std::to_string(x.size()) + "-outcome distribution");
  }
  return eval_(x);
}

UncertaintyFunction UncertaintyFunction::variance(int d) {
  return UncertaintyFunction(Kind::variance, "v", d, variance_uncertainty);
}

UncertaintyFunction UncertaintyFunction::entropy(int d) {
  return UncertaintyFunction(Kind::entropy, "e", d, entropy_uncertainty);
}

UncertaintyFunction UncertaintyFunction::geometric(int d) {
  return UncertaintyFunction(Kind::geometric, "g", d, geometric_uncertainty);
}

UncertaintyFunction UncertaintyFunction::sine(int d) {
  return UncertaintyFunction(Kind::sine, "s", d, sine_uncertainty);
}

UncertaintyFunction UncertaintyFunction::sum_form(const GeneratorFunction& h, int d) {
  if (d < 2) throw ValidationError("sum_form: d must be >= 2, got " + std::to_string(d));
  const auto reject = [&h](const std::string& what) {
    throw ValidationError("sum_form generator '" + h.description() + "' rejected: " + what);
  };

  // (ii) endpoints
  for (double endpoint : {0.0, 1.0}) {
    if (std::abs(h(endpoint)) > 1e-12) {
      reject("h(" + std::to_string(endpoint) + ") = " + std::to_string(h(endpoint)) +
             ", must be 0");
    }
  }
  // audit grid: 101 uniform points on [0, 1]
  std::vector<double> grid(101);
  for (int k = 0; k <= 100; ++k) grid[static_cast<std::size_t>(k)] = k / 100.0;
  // (iii) strict positivity away from the endpoints
  for (int k = 1; k <= 99; ++k) {
    if (!(h(grid[static_cast<std::size_t>(k)]) > 0.0)) {
      reject("positivity fails: h(" + std::to_string(grid[static_cast<std::size_t>(k)]) +
             ") = " + std::to_string(h(grid[static_cast<std::size_t>(k)])));
    }
  }
  // (iv) normalization at 1/d
  const double at_uniform = h(1.0 / d);
  if (std::abs(at_uniform - 1.0 / d) > kAuditTol) {
    reject("normalization fails: h(1/d) = " + std::to_string(at_uniform) + ", expected " +
           std::to_string(1.0 / d));
  }
  // (i) midpoint concavity over all grid pairs
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = a; b < grid.size(); ++b) {
      const double lhs = h(0.5 * (grid[a] + grid[b]));
      const double rhs = 0.5 * (h(grid[a]) + h(grid[b]));
      if (lhs < rhs - kAuditTol) {
        reject("midpoint concavity fails between " + std::to_string(grid[a]) + " and " +
               std::to_string(grid[b]));
      }
    }
  }

  return UncertaintyFunction(Kind::sum_form, "sum[" + h.description() + "]", d,
                             [h](const ProbabilityVector& x) {
                               double acc = 0.0;
                               for (int i = 0; i < x.size(); ++i) acc += h(x[i]);
                               return acc;
                             });
}

UncertaintyFunction UncertaintyFunction::mixture(std::vector<UncertaintyFunction> parts,
                                                 std::vector<double> weights) {
  if (parts.empty()) throw ValidationError("mixture: component list is empty");
  if (parts.size() != weights.size()) {
    throw ValidationError("mixture: " + std::to_string(parts.size()) + " components but " +
                          std::to_string(weights.size()) + " weights");
  }
  const int d = parts.front().arity();
  for (const auto& part : parts) {
    if (part.arity() != d) {
      throw DimensionError("mixture: component '" + part.name() + "' has arity " +
                           std::to_string(part.arity()) + ", expected " + std::to_string(d));
    }
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0 && w <= 1.0)) {
      throw ValidationError("mixture: weight " + std::to_string(w) + " outside (0, 1]");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("mixture: weights sum to " + std::to_string(total) +
                          ", more than 1e-12 away from 1");
  }

  std::ostringstream name;
  name << "mix:";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) name << "+";
    name << weights[i] << "*" << parts[i].name();
  }
  return UncertaintyFunction(
      Kind::mixture, name.str(), d,
      [parts = std::move(parts), weights = std::move(weights)](const ProbabilityVector& x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < parts.size(); ++i) acc += weights[i] * parts[i](x);
        return acc;
      });
}

UncertaintyFunction UncertaintyFunction::custom(
    std::string name, int d, std::function<double(const ProbabilityVector&)> eval) {
  if (!eval) throw ValidationError("custom uncertainty function: evaluator is empty");
  return UncertaintyFunction(Kind::custom, std::move(name), d, std::move(eval));
}

AxiomReport verify_axioms(const UncertaintyFunction& f, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("verify_axioms: samples must be >= 1");
  const int d = f.arity();
  AxiomReport report;

  // deterministic probes: the d vertices and the uniform point
  for (int i = 0; i < d; ++i) {
    const ProbabilityVector vertex = vertex_distribution(d, i);
    const double value = f(vertex);
    record(report.vanishes_at_certainty, std::abs(value) > kAxiomTol, std::abs(value),
           {vertex.values()});
    check_range(report.range, value, vertex);
  }
  {
    const ProbabilityVector uniform = uniform_distribution(d);
    const double value = f(uniform);
    record(report.one_at_uniform, std::abs(value - 1.0) > kAxiomTol, std::abs(value - 1.0),
           {uniform.values()});
    check_range(report.range, value, uniform);
  }

  for (int k = 0; k < samples; ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    const ProbabilityVector x = sample_simplex(d, rng);
    const Permutation h = Permutation::random(d, rng);
    const ProbabilityVector y = sample_simplex(d, rng);
    const double lambda = rng.uniform01();

    const ProbabilityVector hx = permute(x, h);
    const ProbabilityVector mid = convex_combine(x, y, lambda);
    const double fx = f(x);
    const double fhx = f(hx);
    const double fy = f(y);
    const double fmid = f(mid);

    check_range(report.range, fx, x);
    check_range(report.range, fhx, hx);
    check_range(report.range, fy, y);
    check_range(report.range, fmid, mid);

    // (2.3) strict side: positive away from the vertices
    if (x.max_component() <= 1.0 - kInteriorMargin) {
      record(report.vanishes_at_certainty, fx <= 0.0, std::max(-fx, 0.0), {x.values()});
    }
    // (2.4) strict side: below 1 away from uniform
    if (inf_distance_to_uniform(x) >= kInteriorMargin) {
      record(report.one_at_uniform, fx >= 1.0, std::max(fx - 1.0, 0.0), {x.values()});
    }
    // (2.5)
    record(report.symmetry, std::abs(fx - fhx) > kAxiomTol, std::abs(fx - fhx),
           {x.values(), hx.values()});
    // (2.6)
    const double defect = lambda * fx + (1.0 - lambda) * fy - fmid;
    record(report.concavity, defect > kAxiomTol, std::max(defect, 0.0),
           {x.values(), y.values(), mid.values()});
  }
  return report;
}

bool verify_jensen(const UncertaintyFunction& f, int points, int trials, std::uint64_t seed) {
  if (points < 2) throw ValidationError("verify_jensen: points must be >= 2");
  if (trials < 1) throw ValidationError("verify_jensen: trials must be >= 1");
  const int d = f.arity();

  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<double> weights(static_cast<std::size_t>(points));
    double total = 0.0;
    for (double& w : weights) {
      w = rng.exponential();
      total += w;
    }
    for (double& w : weights) w /= total;

    std::vector<double> combined(static_cast<std::size_t>(d), 0.0);
    double rhs = 0.0;
    for (int p = 0; p < points; ++p) {
      const ProbabilityVector z = sample_simplex(d, rng);
      const double w = weights[static_cast<std::size_t>(p)];
      for (int i = 0; i < d; ++i) combined[static_cast<std::size_t>(i)] += w * z[i];
      rhs += w * f(z);
    }
    const double lhs = f(ProbabilityVector(std::move(combined)));
    if (lhs < rhs - kAxiomTol) return false;
  }
  return true;
}

UncertaintyFunction parse_function_spec(const std::string& spec, int d,
                                        const FunctionRegistry& extra) {
  const auto resolve = [&](const std::string& name) -> UncertaintyFunction {
    if (name == "v") return UncertaintyFunction::variance(d);
    if (name == "e") return UncertaintyFunction::entropy(d);
    if (name == "g") return UncertaintyFunction::geometric(d);
    if (name == "s") return UncertaintyFunction::sine(d);
    if (const auto it = extra.find(name); it != extra.end()) return it->second(d);
    throw ValidationError("unknown uncertainty function '" + name + "'");
  };

  if (spec.rfind("mix:", 0) != 0) return resolve(spec);

  std::vector<UncertaintyFunction> parts;
  std::vector<double> weights;
  std::stringstream terms(spec.substr(4));
  std::string term;
  while (std::getline(terms, term, '+')) {
    const auto star = term.find('*');
    if (star == std::string::npos) {
      throw ValidationError("malformed mixture term '" + term + "', expected weight*function");
    }
    double weight = 0.0;
    try {
      std::size_t consumed = 0;
      weight = std::stod(term.substr(0, star), &consumed);
      if (consumed != star) throw std::invalid_argument(term);
    } catch (const std::exception&) {
      throw ValidationError("malformed mixture weight in term '" + term + "'");
    }
    weights.push_back(weight);
    parts.push_back(resolve(term.substr(star + 1)));
  }
  return UncertaintyFunction::mixture(std::move(parts), std::move(weights));
}

}  // namespace quncert
