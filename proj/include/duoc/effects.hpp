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

#ifndef DUOC_EFFECTS_HPP
#define DUOC_EFFECTS_HPP

#include <optional>
#include <vector>

#include "duoc/state.hpp"

namespace duoc {

struct EffectTerm {
  double weight;
  PureStateSpec spec;
};

/// Positive operator below the identity. The optional certificate records a
/// decomposition op = sum_j weight_j |Psi_j><Psi_j| over valid pure states.
struct Effect {
  SystemSignature sig;
  ComplexOperator op;
  std::optional<std::vector<EffectTerm>> certificate;

  /// Builds the operator from its certificate.
  static Effect from_terms(const SystemSignature& sig, std::vector<EffectTerm> terms);
  /// The unit (deterministic) effect.
  static Effect identity(const SystemSignature& sig);
};

/// Ordered list of effects on one signature summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Effect> effects, double tol = kStructuralTol);

  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& operator[](std::size_t i) const { return effects_[i]; }
  std::size_t size() const { return effects_.size(); }
  const SystemSignature& signature() const { return effects_.front().sig; }

 private:
  std::vector<Effect> effects_;
};

ValidityReport validate_effect(const Effect& e, const ValidationOptions& opts = {});

/// Every effect valid and the list complete.
ValidityReport validate_povm(const Povm& povm, const ValidationOptions& opts = {});

/// p_i = Tr(P_i rho).
std::vector<double> born_probabilities(const Povm& povm, const DensityState& rho);

/// Re Tr(A B) without forming the product.
double trace_of_product(const ComplexOperator& a, const ComplexOperator& b);

struct ConditionalResult {
  double probability;
  std::optional<DensityState> post;  // absent when probability <= floor
};

inline constexpr double kConditionalFloor = 1e-12;

/// Applies `e` to the factors `subset` of `rho` (the effect's canonical
/// factor order follows the ascending positions) and returns the outcome
/// probability and the normalized state of the remaining factors.
ConditionalResult conditional_state(const DensityState& rho, const Effect& e,
                                    std::span<const int> subset);

/// {P_yes, P_no} for |Psi> = sqrt(p)|0,k> + sqrt(1-p)|1,1+k> on a bit and
/// an anti-bit; both effects carry certificates.
Povm witness_povm(double p, ParityIndex parity);

/// sqrt(p)|0,k> + sqrt(1-p)|1,1+k> on (1,1) with d = 2.
ComplexVector witness_target(double p, ParityIndex parity);

struct WorstCaseSeparable {
  double min_p_no;
  SeparableSpec argmin;
};

/// Minimum of p(no) over separable (1,1) states on a simplex grid of the
/// gamma weights with spacing 1/round(1/grid_step). Ties keep the first
/// point in lexicographic (g00, g01, g10) order.
WorstCaseSeparable worst_case_no_probability(double p, double grid_step, int parity = 0);

}  // namespace duoc

#endif  // DUOC_EFFECTS_HPP
