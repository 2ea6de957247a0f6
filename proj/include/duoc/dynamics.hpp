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

#ifndef DUOC_DYNAMICS_HPP
#define DUOC_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "duoc/effects.hpp"

namespace duoc {

/// [V (x) Y] o X^shifts o Z^phases on an (m,n)-composite. Shift and phase
/// strings have one entry per factor in canonical order.
struct ReversibleSpec {
  FactorPermutation perm;
  std::vector<int> x_shifts;
  std::vector<int> z_phases;
};

/// Generalized bit flip X^j : |s> -> |s + j mod d>.
ComplexOperator generalized_x(int local_dim, int j);
/// Generalized phase flip Z^j : |s> -> w^(s + j mod d) |s>, w = exp(2 pi i / d).
ComplexOperator generalized_z(int local_dim, int j);

ComplexOperator build_reversible(const ReversibleSpec& spec, const SystemSignature& sig);

/// T(rho) = Tr_AC[(rho_A (x) sigma_CB)(P_AC (x) I_B)].
///
/// `c_factors` lists the ancilla positions that form C; the rest form B. The
/// effect acts on A and C merged in canonical order: dits of A, dits of C,
/// anti-dits of A, anti-dits of C.
struct ConditionalEvolutionSpec {
  DensityState ancilla;
  Effect effect;
  std::vector<int> c_factors;
};

struct EvolutionResult {
  double probability;
  std::optional<DensityState> out;
};

EvolutionResult conditional_evolution(const ConditionalEvolutionSpec& spec, const DensityState& rho);

/// A linear map on operators, given by its action.
using LinearMap = std::function<ComplexOperator(const ComplexOperator&)>;

/// Unnormalized T as a linear map on operators of `input`.
LinearMap as_linear_map(const ConditionalEvolutionSpec& spec, const SystemSignature& input);

/// Output signature of a conditional evolution (the B factors).
SystemSignature output_signature(const ConditionalEvolutionSpec& spec);

/// Stochastic matrix p(y|x): column x holds the distribution over outputs.
/// Strings are flattened classical basis indices.
struct ClassicalChannel {
  RealMatrix cond_prob;
};

/// Columns are distributions within `tol`.
void check_channel(const ClassicalChannel& ch, double tol = kStructuralTol);

/// sum_{x,y} p(y|x) |y><y| <x|rho|x> on a single-kind composite.
DensityState classical_channel_map(const ClassicalChannel& ch, const DensityState& rho);

/// `second` after `first`.
ClassicalChannel compose(const ClassicalChannel& second, const ClassicalChannel& first);

struct TransformationCheck {
  int samples = 50;
  unsigned long long seed = 1;
  double cp_tol = 1e-9;
};

/// Sampled validity check: complete positivity of the Choi matrix, trace
/// non-increase and output validity on random valid input states.
ValidityReport validate_transformation(const LinearMap& map, const SystemSignature& sig_in,
                                       const SystemSignature& sig_out,
                                       const TransformationCheck& check = {});

/// Choi matrix sum_ij |i><j| (x) T(|i><j|), input factor first.
ComplexOperator choi_matrix(const LinearMap& map, long dim_in, long dim_out);

}  // namespace duoc

#endif  // DUOC_DYNAMICS_HPP
