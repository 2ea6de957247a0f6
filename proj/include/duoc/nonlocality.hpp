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

#ifndef DUOC_NONLOCALITY_HPP
#define DUOC_NONLOCALITY_HPP

#include <array>
#include <vector>

#include "duoc/effects.hpp"

namespace duoc {

// Two copies of a dit/anti-dit pair live on the (2,2)-composite in canonical
// order (D1, D2, A1, A2). Alice holds (D1, A2) and Bob holds (D2, A1); the
// "Alice-Bob layout" orders the factors (D1, A2, D2, A1).

enum class Party { kAlice, kBob };

/// Source factor, in Alice-Bob layout, of each canonical (2,2) position.
inline constexpr std::array<int, 4> kAliceBobToCanonical{0, 2, 3, 1};
/// Source factor, in copy layout (D1, A1, D2, A2), of each canonical position.
inline constexpr std::array<int, 4> kCopiesToCanonical{0, 2, 1, 3};

/// Operator given in Alice-Bob layout, moved to canonical order.
ComplexOperator alice_bob_to_canonical(const ComplexOperator& op, int local_dim);

/// |psi>_{D1 A1} (x) |psi>_{D2 A2} in canonical order.
ComplexVector two_copies(const ComplexVector& pair_state, int local_dim);

/// |phi_i^(j)> = |i>_D |i + j mod d>_A on one dit/anti-dit pair.
ComplexVector phi_vector(int local_dim, int i, int j);

/// Max-abs difference between |psi>|psi> and its regrouped expansion
///   sum_{k,l} a_k a_{k+l-r} |phi_k^(l)>_{D1 A2} |phi_{k+l-r}^(2r-l)>_{D2 A1}.
double regroup_check(const ComplexVector& pair_state, int local_dim);

/// Orthonormal two-element basis of C^2; outcome a corresponds to vectors[a].
struct LocalBasis {
  std::array<ComplexVector, 2> vectors;

  static LocalBasis computational();
  /// Real rotation: (cos t, sin t), (-sin t, cos t).
  static LocalBasis rotation(double angle);
  void check(double tol = kStructuralTol) const;
};

/// Alice: sum_l proj(u0 |phi_0^(l)> + u1 |phi_1^(l)>);
/// Bob:   sum_l proj(u0 |phi_l^(l)> + u1 |phi_{l+1}^(l)>). Bits only.
Effect side_effect(Party side, const ComplexVector& u);

Povm side_povm(Party side, const LocalBasis& basis);

/// |v0 w0 + v1 w1|^2 / 2.
double p_quantum(const ComplexVector& v, const ComplexVector& w);

/// p_toy(a,b) = Tr[(P_a)_{D1 A2} (x) (Q_b)_{D2 A1} Phi (x) Phi], rows a, columns b.
RealMatrix two_copy_distribution(const LocalBasis& alice, const LocalBasis& bob);

struct ChshSetting {
  LocalBasis basis;
  std::array<int, 2> signs{+1, -1};
};

struct ChshSettings {
  std::array<ChshSetting, 2> alice;
  std::array<ChshSetting, 2> bob;

  /// Basis rotation angles (0, pi/4) for Alice and (pi/8, -pi/8) for Bob.
  static ChshSettings optimal();
  static ChshSettings from_angles(double a0, double a1, double b0, double b1);
};

struct ChshResult {
  std::array<std::array<double, 2>, 2> expectations;  // <A_i B_j>
  double f;
};

ChshResult chsh_value(const ChshSettings& settings);

struct ActivationSetup {
  double alpha_prime;
  double beta_prime;
  double theta;
  int first;   // basis index playing the role of 0
  int second;  // basis index playing the role of 1
  int parity;
  int local_dim;
  std::vector<Povm> alice;  // A_0, A_1 as {+1, -1} effects on (D1, A2)
  std::vector<Povm> bob;    // B_0, B_1 on (D2, A1)
};

/// Measurements for two copies of sum_i alpha_i |i>|i + r>. Coefficients are
/// phase-normalized and the two largest magnitudes take the roles of
/// indices 0 and 1.
ActivationSetup activation_setup(const std::vector<Complex>& alphas, int parity, int local_dim);

/// 2 + 2(a^2+b^2)(sqrt(1 + 4a^2 b^2/(a^2+b^2)^2) - 1), or 2 when a = b = 0.
double activation_closed_form(double alpha_prime, double beta_prime);

struct ActivationValue {
  double f_simulated;
  double f_closed;
  std::array<std::array<double, 2>, 2> expectations;
};

/// Born-rule CHSH value of the setup on two copies of `pair_state`, next to
/// the closed form.
ActivationValue activation_f(const ActivationSetup& setup, const ComplexVector& pair_state);

/// sum_i alpha_i |i>|i + r> on the (1,1)-composite.
ComplexVector pair_state(const std::vector<Complex>& alphas, int parity, int local_dim);

}  // namespace duoc

#endif  // DUOC_NONLOCALITY_HPP
