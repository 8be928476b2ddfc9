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

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "quncert/measures.hpp"
#include "quncert/quantum.hpp"
#include "quncert/uncertainty.hpp"

namespace quncert::io {

using json = nlohmann::json;

// Wire formats:
//   complex number       [re, im]
//   matrix (row-major)   [[[re,im], ...], ...]
//   vector               [[re,im], ...]
//   probability vector   plain array of reals
//   state file           {"density": <matrix>}  or  {"ket": <vector>}
//   observable file      {"effects": [<matrix>, ...]}

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j);

json probability_vector_to_json(const ProbabilityVector& x);

json state_to_json(const State& rho);
State state_from_json(const json& j);

json observable_to_json(const Observable& a);
Observable observable_from_json(const json& j);

/// {axiom: {pass, worst_violation, witness}} for each of the five checks.
json axiom_report_to_json(const AxiomReport& report);

json discrimination_report_to_json(const DiscriminationReport& report);

// File loaders; ValidationError on unreadable files or malformed JSON.
State load_state(const std::string& path);
Observable load_observable(const std::string& path);
json load_json(const std::string& path);

}  // namespace quncert::io
