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

#ifndef DUOC_ORACLE_HPP
#define DUOC_ORACLE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "duoc/sampling.hpp"
#include "duoc/state.hpp"

/// Brute-force reference computations. Index arithmetic and contractions
/// here are written out by hand and do not call the engine's tensor kernels.
namespace duoc::oracle {

/// Random spec: uniform permutations, parities and tail; complex Gaussian
/// coefficients, normalized.
PureStateSpec random_valid_state(const SystemSignature& sig, Rng& rng);
PureStateSpec random_valid_state(const SystemSignature& sig, std::uint64_t seed);

/// Amplitude-by-amplitude construction of the vector of a spec.
ComplexVector realize(const PureStateSpec& spec);

/// (<e|_subset (x) I) |psi>, remaining factors in ascending order.
ComplexVector contract_branch(const ComplexVector& psi, const SystemSignature& sig,
                              const ComplexVector& e, std::span<const int> subset);

struct Contraction {
  double probability;
  ComplexOperator unnormalized_post;  // Tr_subset[(E (x) I) rho]
};

/// Direct index sum over the measured factors.
Contraction conditional_contraction(const ComplexOperator& rho, const SystemSignature& sig,
                                    const ComplexOperator& effect, std::span<const int> subset);

enum class EffectMode {
  kCertified,  // weighted sum of valid pure effects, total weight <= 1
  kCorrupted,  // projector on a random unstructured vector
};

struct ConsistencyReport {
  int trials = 0;
  int failures = 0;
  int skipped = 0;  // outcome probability below the conditional floor
  double max_reconstruction_error = 0.0;
};

/// Random valid mixed states, random effects on random proper nonempty factor
/// subsets; counts conditional states that fail pure-state validation of
/// their branches or do not match the direct contraction.
ConsistencyReport brute_force_conditional_check(int trials, const SystemSignature& sig,
                                                std::uint64_t seed,
                                                EffectMode mode = EffectMode::kCertified);

/// Every signature with m, n <= 2 and at least two factors, for d in {2,3}.
std::vector<SystemSignature> consistency_signatures();

/// `trials` split evenly over `consistency_signatures()`; reports summed.
ConsistencyReport consistency_sweep(int trials, std::uint64_t seed,
                                    EffectMode mode = EffectMode::kCertified);

/// Frobenius distance from a (1,1), d = 2 density matrix to the convex hull
/// of parity-definite pure states on a grid of `resolution` polar by
/// 2*`resolution` azimuthal angles per sector (Frank-Wolfe iterations).
double pair_hull_distance(const ComplexOperator& rho, int resolution = 24, int iterations = 4000);

struct GridSpec {
  double step = 0.01;
  /// Closed ranges for gamma_00, gamma_01, gamma_10; gamma_11 is the rest.
  std::array<std::pair<double, double>, 3> ranges{{{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}};
};

/// min over grid points of 1 - gamma_{0,k} p - gamma_{1,1+k} (1-p) for
/// parity k in {0,1}.
double separable_grid_min(double p, const GridSpec& grid = {}, int parity = 0);

}  // namespace duoc::oracle

#endif  // DUOC_ORACLE_HPP
