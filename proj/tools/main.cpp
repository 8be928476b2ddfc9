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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "quncert/errors.hpp"
#include "quncert/io.hpp"
#include "quncert/measures.hpp"

using namespace quncert;
using nlohmann::json;

namespace {

// Exit code map, fixed for CI use.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;      // parse/validation failure
constexpr int kExitDimension = 2;  // shape mismatch between valid objects
constexpr int kExitProperty = 3;   // a checked property does not hold

// Desk-scale tool: dense eigensolves stay instant up to this size.
constexpr int kMaxDim = 64;

struct Options {
  std::vector<std::string> functions;
  std::string observable_path;
  std::vector<std::string> state_paths;
  int d = 0;
  int samples = 10000;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  bool has_alpha = false;
  std::string format = "table";
};

std::string fmt4(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string format_distribution(const ProbabilityVector& p) {
  std::string out = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt4(p[i]);
  }
  return out + ")";
}

// Control functions registrable through the specifier grammar; both break
// the axioms and exist so that failure paths stay exercised end to end.
FunctionRegistry control_registry() {
  return {
      {"purity",
       [](int d) {
         return UncertaintyFunction::custom("purity", d, [](const ProbabilityVector& x) {
           double acc = 0.0;
           for (int i = 0; i < x.size(); ++i) acc += x[i] * x[i];
           return acc;
         });
       }},
      {"first",
       [](int d) {
         return UncertaintyFunction::custom(
             "first", d, [](const ProbabilityVector& x) { return x[0]; });
       }},
  };
}

State load_state_capped(const std::string& path) {
  State rho = io::load_state(path);
  if (rho.dim() > kMaxDim) {
    throw ValidationError("state in " + path + " has dimension " + std::to_string(rho.dim()) +
                          "; this tool caps matrices at " + std::to_string(kMaxDim));
  }
  return rho;
}

Observable load_observable_capped(const std::string& path) {
  Observable a = io::load_observable(path);
  if (a.hilbert_dim() > kMaxDim) {
    throw ValidationError("observable in " + path + " has dimension " +
                          std::to_string(a.hilbert_dim()) + "; this tool caps matrices at " +
                          std::to_string(kMaxDim));
  }
  return a;
}

std::vector<UncertaintyFunction> parse_functions(const std::vector<std::string>& specs, int d) {
  std::vector<UncertaintyFunction> fs;
  const FunctionRegistry controls = control_registry();
  fs.reserve(specs.size());
  for (const auto& spec : specs) fs.push_back(parse_function_spec(spec, d, controls));
  return fs;
}

int cmd_eval(const Options& opt) {
  const Observable a = load_observable_capped(opt.observable_path);
  const State rho = load_state_capped(opt.state_paths.front());
  const auto fs = parse_functions(opt.functions, a.outcome_count());
  const ProbabilityVector p = born_distribution(rho, a);

  if (opt.format == "json") {
    json values = json::object();
    for (const auto& f : fs) values[f.name()] = measure(UncertaintyMeasure(f, a), rho);
    std::cout << json{{"distribution", io::probability_vector_to_json(p)},
                      {"values", std::move(values)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "P = " << format_distribution(p) << "\n";
    for (const auto& f : fs) {
      std::cout << f.name() << " = " << fmt4(measure(UncertaintyMeasure(f, a), rho)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_distribution(const Options& opt) {
  const Observable a = load_observable_capped(opt.observable_path);
  const State rho = load_state_capped(opt.state_paths.front());
  const ProbabilityVector p = born_distribution(rho, a);
  if (opt.format == "json") {
    std::cout << json{{"distribution", io::probability_vector_to_json(p)}}.dump() << "\n";
  } else {
    std::cout << "P = " << format_distribution(p) << "\n";
  }
  return kExitOk;
}

int cmd_axioms(const Options& opt) {
  if (opt.d < 2) throw ValidationError("axioms: -d must be >= 2");
  const UncertaintyFunction f =
      parse_function_spec(opt.functions.front(), opt.d, control_registry());
  const AxiomReport report = verify_axioms(f, opt.samples, opt.seed);
  const int jensen_points = 4;
  const bool jensen = verify_jensen(f, jensen_points, opt.samples, opt.seed);
  const bool all_pass = report.all_pass() && jensen;

  if (opt.format == "json") {
    json j = io::axiom_report_to_json(report);
    j["jensen"] = json{{"pass", jensen}, {"points", jensen_points}, {"trials", opt.samples}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "axiom checks for '" << f.name() << "' at d = " << opt.d
              << " (samples = " << opt.samples << ", seed = " << opt.seed << ")\n";
    const auto line = [](const char* name, const AxiomCheck& check) {
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "  %-22s %-5s worst violation %.3e\n", name,
                    check.pass ? "pass" : "FAIL", check.worst_violation);
      std::cout << buffer;
    };
    line("vanishes_at_certainty", report.vanishes_at_certainty);
    line("one_at_uniform", report.one_at_uniform);
    line("symmetry", report.symmetry);
    line("concavity", report.concavity);
    line("range", report.range);
    char jensen_line[64];
    std::snprintf(jensen_line, sizeof(jensen_line), "  %-22s %s\n", "jensen (4-point)",
                  jensen ? "pass" : "FAIL");
    std::cout << jensen_line;
    std::cout << (all_pass ? "all axioms hold" : "AXIOM FAILURE") << "\n";
  }
  return all_pass ? kExitOk : kExitProperty;
}

int cmd_maxunc_check(const Options& opt) {
  const Observable a = load_observable_capped(opt.observable_path);
  const State rho = load_state_capped(opt.state_paths.front());
  const ProbabilityVector p = born_distribution(rho, a);
  const bool maximal = is_maximal_uncertainty(p);
  if (opt.format == "json") {
    std::cout << json{{"maximal_uncertainty", maximal},
                      {"distribution", io::probability_vector_to_json(p)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "maximal uncertainty state: " << (maximal ? "true" : "false") << "\n";
    std::cout << "P = " << format_distribution(p) << "\n";
  }
  return maximal ? kExitOk : kExitProperty;
}

int cmd_maxunc_generate(const Options& opt) {
  State rho = [&] {
    if (opt.has_alpha) return maximal_uncertainty_qubit_family(opt.alpha);
    if (opt.d < 2) throw ValidationError("maxunc generate: need -d >= 2 or --alpha");
    if (opt.d > kMaxDim) {
      throw ValidationError("maxunc generate: -d capped at " + std::to_string(kMaxDim));
    }
    Rng rng(mix_seed(opt.seed, 0));
    return make_maximal_uncertainty_state(opt.d,
                                          random_zero_diagonal_hermitian(opt.d, rng));
  }();
  std::cout << io::state_to_json(rho).dump() << "\n";
  return kExitOk;
}

int cmd_discriminate(const Options& opt) {
  const Observable a = load_observable_capped(opt.observable_path);
  std::vector<std::pair<std::string, State>> states;
  for (const auto& path : opt.state_paths) {
    // label rows by file stem
    auto stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) {
      stem = stem.substr(slash + 1);
    }
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) {
      stem = stem.substr(0, dot);
    }
    states.emplace_back(stem, load_state_capped(path));
  }
  const auto fs = parse_functions(opt.functions, a.outcome_count());
  const DiscriminationReport report = discriminate(states, a, fs);
  if (opt.format == "json") {
    std::cout << io::discrimination_report_to_json(report).dump() << "\n";
  } else {
    std::cout << format_table(report);
  }
  return kExitOk;
}

int cmd_examples() {
  // embedded fixtures: the sharp and unsharp qubit pairs and the two states
  // they are probed with
  ComplexMatrix a0(2, 2), b0(2, 2);
  a0 << 0.5, 0.5, 0.5, 0.5;
  b0 << 0.5, 1.0 / 6.0, 1.0 / 6.0, 0.5;
  const Observable sharp({Effect(a0), Effect(ComplexMatrix::Identity(2, 2) - a0)});
  const Observable unsharp({Effect(b0), Effect(ComplexMatrix::Identity(2, 2) - b0)});
  const State rho = State::completely_mixed(2);
  ComplexVector plus(2);
  plus << Complex(1, 0), Complex(1, 0);
  const State psi = State::pure(plus);

  const ProbabilityVector x = born_distribution(rho, sharp);
  const ProbabilityVector y = born_distribution(psi, sharp);
  const ProbabilityVector z = born_distribution(psi, unsharp);

  std::cout << "Two-outcome qubit measurements\n";
  std::cout << "  A0 = [[" << fmt4(a0(0, 0).real()) << ", " << fmt4(a0(0, 1).real()) << "], ["
            << fmt4(a0(1, 0).real()) << ", " << fmt4(a0(1, 1).real())
            << "]]   (sharp, rank-one projective)\n";
  std::cout << "  B0 = [[" << fmt4(b0(0, 0).real()) << ", " << fmt4(b0(0, 1).real()) << "], ["
            << fmt4(b0(1, 0).real()) << ", " << fmt4(b0(1, 1).real())
            << "]]   (unsharp); second effects are I minus the first\n";
  std::cout << "\n";
  std::cout << "Born distributions\n";
  std::cout << "  x = P[rho, A] = P[rho, B]   rho = I/2\n";
  std::cout << "  y = P[psi, A]               psi = (|0> + |1>)/sqrt(2)\n";
  std::cout << "  z = P[psi, B]\n";
  std::cout << "\n";

  const std::vector<UncertaintyFunction> fs = {
      UncertaintyFunction::variance(2), UncertaintyFunction::entropy(2),
      UncertaintyFunction::geometric(2), UncertaintyFunction::sine(2)};
  std::cout << "dist     P(0)     P(1)        v        e        g        s\n";
  const auto row = [&fs](const char* label, const ProbabilityVector& p) {
    std::cout << label;
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "%9.4f", p[0]);
    std::cout << buffer;
    std::snprintf(buffer, sizeof(buffer), "%9.4f", p[1]);
    std::cout << buffer;
    for (const auto& f : fs) {
      std::snprintf(buffer, sizeof(buffer), "%9.4f", f(p));
      std::cout << buffer;
    }
    std::cout << "\n";
  };
  row("x   ", x);
  row("y   ", y);
  row("z   ", z);
  std::cout << "\n";
  std::cout << "note: s(z) = [sin(2*pi/3) + sin(pi/3)] / [2*sin(pi/2)] = sqrt(3)/2, which\n";
  std::cout << "      rounds to 0.8660; the value 0.500 sometimes reported for this entry\n";
  std::cout << "      is inconsistent with the sine formula.\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quncert - uncertainty of quantum states under POVM measurements"};
  app.require_subcommand(1);

  Options opt;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate uncertainty measures of a state");
  eval->add_option("-f,--function", opt.functions, "function specifier (v|e|g|s|mix:...)")
      ->required()
      ->delimiter(',');
  eval->add_option("-A,--observable", opt.observable_path, "observable JSON file")->required();
  eval->add_option("-s,--state", opt.state_paths, "state JSON file")
      ->required()
      ->expected(1);
  add_format(eval);

  CLI::App* distribution =
      app.add_subcommand("distribution", "print the Born distribution of a state");
  distribution->add_option("-A,--observable", opt.observable_path, "observable JSON file")
      ->required();
  distribution->add_option("-s,--state", opt.state_paths, "state JSON file")
      ->required()
      ->expected(1);
  add_format(distribution);

  CLI::App* axioms =
      app.add_subcommand("axioms", "run the randomized axiom suite on a function");
  axioms->add_option("-f,--function", opt.functions, "function specifier")
      ->required()
      ->expected(1);
  axioms->add_option("-d,--dim", opt.d, "outcome count")->required();
  axioms->add_option("--samples", opt.samples, "random samples")->capture_default_str();
  axioms->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  add_format(axioms);

  CLI::App* maxunc = app.add_subcommand("maxunc", "maximal uncertainty state tools");
  maxunc->require_subcommand(1);
  CLI::App* check = maxunc->add_subcommand("check", "test a state against an observable");
  check->add_option("-A,--observable", opt.observable_path, "observable JSON file")->required();
  check->add_option("-s,--state", opt.state_paths, "state JSON file")->required()->expected(1);
  add_format(check);
  CLI::App* generate =
      maxunc->add_subcommand("generate", "emit a maximal uncertainty state as JSON");
  generate->add_option("-d,--dim", opt.d, "dimension for a random perturbed state");
  generate->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  generate->add_option("--alpha", opt.alpha, "emit the qubit family member for this alpha")
      ->check(CLI::Range(-1.0, 1.0));

  CLI::App* discriminate_cmd =
      app.add_subcommand("discriminate", "compare several states under one observable");
  discriminate_cmd->add_option("-A,--observable", opt.observable_path, "observable JSON file")
      ->required();
  discriminate_cmd->add_option("-s,--state", opt.state_paths, "state JSON files (repeat)")
      ->required()
      ->expected(2, 64);
  discriminate_cmd
      ->add_option("-f,--function", opt.functions, "function specifiers (default v,e,g,s)")
      ->delimiter(',');
  add_format(discriminate_cmd);

  CLI::App* examples =
      app.add_subcommand("examples", "print the worked qubit table for x, y, z");
  (void)examples;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  opt.has_alpha = generate->count("--alpha") > 0;
  if (opt.functions.empty()) opt.functions = {"v", "e", "g", "s"};

  try {
    if (app.got_subcommand(eval)) return cmd_eval(opt);
    if (app.got_subcommand(distribution)) return cmd_distribution(opt);
    if (app.got_subcommand(axioms)) return cmd_axioms(opt);
    if (app.got_subcommand(maxunc)) {
      if (maxunc->got_subcommand(check)) return cmd_maxunc_check(opt);
      return cmd_maxunc_generate(opt);
    }
    if (app.got_subcommand(discriminate_cmd)) return cmd_discriminate(opt);
    if (app.got_subcommand(examples)) return cmd_examples();
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
