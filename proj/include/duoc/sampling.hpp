// Copyright 2026 The duoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUOC_SAMPLING_HPP
#define DUOC_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "duoc/state.hpp"

namespace duoc {

/// Seedable generator with platform-independent streams: draws come from
/// std::mt19937_64 (whose output sequence is fixed by the standard) and are
/// turned into doubles and normals here rather than by <random>
/// distributions, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  /// Standard normal (Box-Muller, one draw per call).
  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random permutation of {0..n-1}.
std::vector<int> random_permutation(int n, Rng& rng);

/// Random pure state spec: uniform permutations, parities and tail; complex
/// Gaussian coefficients on every index string, normalized.
PureStateSpec random_pure_spec(const SystemSignature& sig, Rng& rng);

/// Mixture of `terms` random pure states with random weights.
DensityState random_mixed_state(const SystemSignature& sig, int terms, Rng& rng);

/// Haar-like random unit vector with no structure (not a valid state in
/// general). Used for negative controls.
ComplexVector random_unit_vector(long dim, Rng& rng);

}  // namespace duoc

#endif  // DUOC_SAMPLING_HPP
