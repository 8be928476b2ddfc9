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
#include <random>

namespace quncert {

/// Mixes a base seed with a sample index (splitmix64 finalizer). Property
/// suites derive one stream per sample from (seed, index), so reports are
/// identical for a given seed no matter how samples are scheduled.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded random stream. The raw engine is std::mt19937_64, whose output
/// sequence is fully specified by the standard; the variate transforms are
/// done by hand so that a seed pins down every draw bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double strictly inside (0, 1).
  double uniform01();

  /// Standard exponential, Exp(1).
  double exponential();

  /// Standard normal via Box-Muller (one spare cached).
  double gaussian();

  /// Uniform integer in [0, n), n >= 1. Rejection sampled, no modulo bias.
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace quncert
