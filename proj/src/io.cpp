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

#include "quncert/io.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "quncert/errors.hpp"

namespace quncert::io {

namespace {

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(where + ": a complex entry must be a [re, im] pair, got " + j.dump());
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ValidationError(where + ": entries must be finite");
  }
  return {re, im};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("matrix: expected a non-empty array of rows, got " + j.dump());
  }
  const auto n = j.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw ValidationError("matrix: row " + std::to_string(i) + " has " +
                            std::to_string(row.is_array() ? row.size() : 0) +
                            " entries, expected a square " + std::to_string(n) + "x" +
                            std::to_string(n) + " layout");
    }
    for (std::size_t k = 0; k < n; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(row[k], "matrix entry (" + std::to_string(i) + "," +
                                        std::to_string(k) + ")");
    }
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(complex_to_json(v(i)));
  return entries;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("vector: expected a non-empty array of [re, im] pairs, got " +
                          j.dump());
  }
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        complex_from_json(j[i], "vector entry " + std::to_string(i));
  }
  return v;
}

json probability_vector_to_json(const ProbabilityVector& x) {
  return json(x.values());
}

json state_to_json(const State& rho) { return json{{"density", matrix_to_json(rho.density())}}; }

State state_from_json(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("state: expected an object with a 'density' or 'ket' key");
  }
  const bool has_density = j.contains("density");
  const bool has_ket = j.contains("ket");
  if (has_density == has_ket) {
    throw ValidationError("state: exactly one of 'density' or 'ket' must be present");
  }
  if (has_density) return State(matrix_from_json(j.at("density")));
  return State::pure(vector_from_json(j.at("ket")));
}

json observable_to_json(const Observable& a) {
  json effects = json::array();
  for (const Effect& effect : a.effects()) effects.push_back(matrix_to_json(effect.matrix()));
  return json{{"effects", std::move(effects)}};
}

Observable observable_from_json(const json& j) {
  if (!j.is_object() || !j.contains("effects") || !j.at("effects").is_array()) {
    throw ValidationError("observable: expected an object with an 'effects' array");
  }
  std::vector<Effect> effects;
  effects.reserve(j.at("effects").size());
  for (const json& m : j.at("effects")) effects.emplace_back(matrix_from_json(m));
  return Observable(std::move(effects));
}

namespace {

json axiom_check_to_json(const AxiomCheck& check) {
  return json{{"pass", check.pass},
              {"worst_violation", check.worst_violation},
              {"witness", json(check.witness)}};
}

}  // namespace

json axiom_report_to_json(const AxiomReport& report) {
  return json{{"vanishes_at_certainty", axiom_check_to_json(report.vanishes_at_certainty)},
              {"one_at_uniform", axiom_check_to_json(report.one_at_uniform)},
              {"symmetry", axiom_check_to_json(report.symmetry)},
              {"concavity", axiom_check_to_json(report.concavity)},
              {"range", axiom_check_to_json(report.range)}};
}

json discrimination_report_to_json(const DiscriminationReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json values = json::object();
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      values[report.function_names[c]] = row.values[c];
    }
    rows.push_back(json{{"label", row.label},
                        {"distribution", probability_vector_to_json(row.distribution)},
                        {"values", std::move(values)}});
  }
  json gaps = json::array();
  for (const auto& gap : report.gaps) {
    gaps.push_back(json{{"first", gap.first}, {"second", gap.second}, {"gap", gap.gap}});
  }
  return json{{"states", std::move(rows)}, {"pairwise_gaps", std::move(gaps)}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

State load_state(const std::string& path) { return state_from_json(load_json(path)); }

Observable load_observable(const std::string& path) {
  return observable_from_json(load_json(path));
}

}  // namespace quncert::io
