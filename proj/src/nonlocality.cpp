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


#include "duoc/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "duoc/errors.hpp"

namespace duoc {

namespace {

constexpr double kPi = 3.14159265358979323846;

SystemSignature pair_sig(int d) { return SystemSignature(d, 1, 1); }
SystemSignature two_copy_sig(int d) { return SystemSignature(d, 2, 2); }

PureStateSpec pair_spec(int d, std::map<std::vector<int>, Complex> coeffs, int parity) {
  return PureStateSpec{pair_sig(d), FactorPermutation::identity(1, 1), std::move(coeffs),
                       {parity}, {}};
}

void check_unit(const ComplexVector& u, const char* what) {
  if (u.size() != 2) throw ShapeError(std::string(what) + ": expected a 2-dim vector");
  if (std::abs(u.norm() - 1.0) > 1e-10) {
    throw NormalizationError(std::string(what) + ": vector is not normalized");
  }
}

// Coefficients and parity of a valid (1,1) pure state.
struct PairForm {
  std::vector<Complex> alphas;
  int parity;
};

PairForm pair_form(const ComplexVector& psi, int d) {
  const auto sig = pair_sig(d);
  const auto report = validate_pure_state(psi, sig);
  if (!report.valid || !report.spec) {
    throw ValidityError("pair state is not a valid (1,1) pure state: " + report.witness);
  }
  PairForm form{std::vector<Complex>(static_cast<std::size_t>(d), Complex(0.0)),
                report.spec->parity.at(0)};
  for (int i = 0; i < d; ++i) {
    form.alphas[static_cast<std::size_t>(i)] = psi(i * d + oplus(i, form.parity, d));
  }
  return form;
}

}  // namespace

ComplexOperator alice_bob_to_canonical(const ComplexOperator& op, int local_dim) {
  const std::vector<int> dims(4, local_dim);
  return permute_operator_factors(op, dims, kAliceBobToCanonical);
}

ComplexVector two_copies(const ComplexVector& pair_state, int local_dim) {
  const long dim = static_cast<long>(local_dim) * local_dim;
  if (pair_state.size() != dim) throw ShapeError("two_copies: pair state dimension mismatch");
  const std::vector<int> dims(4, local_dim);
  return permute_factors(tensor_product(pair_state, pair_state), dims, kCopiesToCanonical);
}

ComplexVector phi_vector(int local_dim, int i, int j) {
  const int d = local_dim;
  return basis_vector(static_cast<long>(d) * d, static_cast<long>(oplus(i, 0, d)) * d + oplus(i, j, d));
}

double regroup_check(const ComplexVector& pair_state, int local_dim) {
  const int d = local_dim;
  const auto form = pair_form(pair_state, d);
  const int r = form.parity;
  const long dim = static_cast<long>(d) * d * d * d;
  ComplexVector ab = ComplexVector::Zero(dim);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const int k2 = oplus(k + l, -r, d);
      const Complex amp = form.alphas[static_cast<std::size_t>(k)] *
                          form.alphas[static_cast<std::size_t>(k2)];
      ab += amp * tensor_product(phi_vector(d, k, l), phi_vector(d, k2, oplus(2 * r, -l, d)));
    }
  }
  const std::vector<int> dims(4, d);
  const ComplexVector rhs = permute_factors(ab, dims, kAliceBobToCanonical);
  return max_abs(two_copies(pair_state, d) - rhs);
}

LocalBasis LocalBasis::computational() { return rotation(0.0); }

LocalBasis LocalBasis::rotation(double angle) {
  LocalBasis b;
  b.vectors[0] = ComplexVector(2);
  b.vectors[0] << std::cos(angle), std::sin(angle);
  b.vectors[1] = ComplexVector(2);
  b.vectors[1] << -std::sin(angle), std::cos(angle);
  return b;
}

void LocalBasis::check(double tol) const {
  for (const auto& v : vectors) {
    if (v.size() != 2) throw ShapeError("local basis vectors must be 2-dimensional");
    if (std::abs(v.norm() - 1.0) > tol) throw NormalizationError("local basis vector not normalized");
  }
  if (std::abs(vectors[0].dot(vectors[1])) > tol) {
    throw DomainError("local basis vectors are not orthogonal");
  }
}

Effect side_effect(Party side, const ComplexVector& u) {
  check_unit(u, "side_effect");
  std::vector<EffectTerm> terms;
  for (int l = 0; l < 2; ++l) {
    std::map<std::vector<int>, Complex> coeffs;
    if (side == Party::kAlice) {
      coeffs[{0}] = u(0);
      coeffs[{1}] = u(1);
    } else {
      coeffs[{l}] = u(0);
      coeffs[{oplus(l, 1, 2)}] = u(1);
    }
    terms.push_back({1.0, pair_spec(2, std::move(coeffs), l)});
  }
  return Effect::from_terms(pair_sig(2), std::move(terms));
}

Povm side_povm(Party side, const LocalBasis& basis) {
  basis.check();
  return Povm({side_effect(side, basis.vectors[0]), side_effect(side, basis.vectors[1])});
}

double p_quantum(const ComplexVector& v, const ComplexVector& w) {
  check_unit(v, "p_quantum");
  check_unit(w, "p_quantum");
  return std::norm(v(0) * w(0) + v(1) * w(1)) / 2.0;
}

RealMatrix two_copy_distribution(const LocalBasis& alice, const LocalBasis& bob) {
  const auto a = side_povm(Party::kAlice, alice);
  const auto b = side_povm(Party::kBob, bob);
  ComplexVector phi = (phi_vector(2, 0, 0) + phi_vector(2, 1, 0)) / std::sqrt(2.0);
  const auto rho = DensityState::pure(two_copy_sig(2), two_copies(phi, 2));
  RealMatrix p(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexOperator joint = alice_bob_to_canonical(
          tensor_product(a[static_cast<std::size_t>(i)].op, b[static_cast<std::size_t>(j)].op), 2);
      p(i, j) = trace_of_product(joint, rho.matrix());
    }
  }
  return p;
}

ChshSettings ChshSettings::optimal() { return from_angles(0.0, kPi / 4, kPi / 8, -kPi / 8); }

ChshSettings ChshSettings::from_angles(double a0, double a1, double b0, double b1) {
  ChshSettings s;
  s.alice[0].basis = LocalBasis::rotation(a0);
  s.alice[1].basis = LocalBasis::rotation(a1);
  s.bob[0].basis = LocalBasis::rotation(b0);
  s.bob[1].basis = LocalBasis::rotation(b1);
  return s;
}

ChshResult chsh_value(const ChshSettings& settings) {
  ChshResult out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& sa = settings.alice[static_cast<std::size_t>(i)];
      const auto& sb = settings.bob[static_cast<std::size_t>(j)];
      const RealMatrix p = two_copy_distribution(sa.basis, sb.basis);
      double e = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          e += sa.signs[static_cast<std::size_t>(a)] * sb.signs[static_cast<std::size_t>(b)] * p(a, b);
        }
      }
      out.expectations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  }
  const auto& e = out.expectations;
  out.f = e[0][0] + e[0][1] + e[1][0] - e[1][1];
  return out;
}

namespace {

// {+1, -1} measurement whose +1 effect projects on c0 |phi_first^(r)> +
// c1 |phi_second^(r)>.
Povm activation_povm(const ActivationSetup& s, double c0, double c1) {
  const int d = s.local_dim;
  const int r = s.parity;
  const auto sig = pair_sig(d);
  std::vector<EffectTerm> plus{
      {1.0, pair_spec(d, {{{s.first}, c0}, {{s.second}, c1}}, r)}};
  std::vector<EffectTerm> minus{
      {1.0, pair_spec(d, {{{s.first}, -c1}, {{s.second}, c0}}, r)}};
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      if (k == r && (i == s.first || i == s.second)) continue;
      minus.push_back({1.0, pair_spec(d, {{{i}, Complex(1.0)}}, k)});
    }
  }
  return Povm({Effect::from_terms(sig, std::move(plus)), Effect::from_terms(sig, std::move(minus))});
}

}  // namespace

ActivationSetup activation_setup(const std::vector<Complex>& alphas, int parity, int local_dim) {
  const int d = local_dim;
  if (static_cast<int>(alphas.size()) != d) {
    throw ShapeError("activation_setup: expected one coefficient per basis index");
  }
  (void)ParityIndex(parity, d);
  double total = 0.0;
  for (const auto& a : alphas) total += std::norm(a);
  if (std::abs(total - 1.0) > 1e-10) throw NormalizationError("activation_setup: coefficients not normalized");

  std::vector<int> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(alphas[static_cast<std::size_t>(a)]) > std::abs(alphas[static_cast<std::size_t>(b)]);
  });
  const double a0 = std::abs(alphas[static_cast<std::size_t>(idx[0])]);
  const double a1 = std::abs(alphas[static_cast<std::size_t>(idx[1])]);
  if (a1 <= kStructuralTol) {
    throw NotEntangledError("activation_setup: fewer than two nonzero coefficients");
  }

  ActivationSetup s{};
  s.first = idx[0];
  s.second = idx[1];
  s.parity = parity;
  s.local_dim = d;
  s.alpha_prime = a0 * a0;
  s.beta_prime = a1 * a1;
  s.theta = std::atan2(2.0 * s.alpha_prime * s.beta_prime,
                       s.alpha_prime * s.alpha_prime + s.beta_prime * s.beta_prime);
  const double c = std::cos(s.theta);
  const double sn = std::sin(s.theta);
  const double norm = std::sqrt(2.0 + 2.0 * c);
  s.alice.push_back(activation_povm(s, 1.0, 0.0));
  s.alice.push_back(activation_povm(s, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)));
  s.bob.push_back(activation_povm(s, (1.0 + c) / norm, sn / norm));
  s.bob.push_back(activation_povm(s, (1.0 + c) / norm, -sn / norm));
  return s;
}

double activation_closed_form(double alpha_prime, double beta_prime) {
  const double n2 = alpha_prime * alpha_prime + beta_prime * beta_prime;
  if (n2 == 0.0) return 2.0;
  const double x = alpha_prime * beta_prime / n2;
  return 2.0 + 2.0 * n2 * (std::sqrt(1.0 + 4.0 * x * x) - 1.0);
}

ActivationValue activation_f(const ActivationSetup& s, const ComplexVector& pair_state) {
  const int d = s.local_dim;
  const auto form = pair_form(pair_state, d);
  if (form.parity != s.parity) throw DomainError("activation_f: state parity differs from setup parity");
  ComplexVector psi = pair_state.cwiseAbs().cast<Complex>();
  const auto rho = DensityState::pure(two_copy_sig(d), two_copies(psi, d));

  ActivationValue out{};
  constexpr std::array<int, 2> kSigns{+1, -1};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& a = s.alice[static_cast<std::size_t>(i)];
      const auto& b = s.bob[static_cast<std::size_t>(j)];
      double e = 0.0;
      for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
          const ComplexOperator joint = alice_bob_to_canonical(tensor_product(a[x].op, b[y].op), d);
          e += kSigns[x] * kSigns[y] * trace_of_product(joint, rho.matrix());
        }
      }
      out.expectations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  }
  const auto& e = out.expectations;
  out.f_simulated = e[0][0] + e[0][1] + e[1][0] - e[1][1];
  out.f_closed = activation_closed_form(s.alpha_prime, s.beta_prime);
  return out;
}

ComplexVector pair_state(const std::vector<Complex>& alphas, int parity, int local_dim) {
  const int d = local_dim;
  if (static_cast<int>(alphas.size()) != d) throw ShapeError("pair_state: expected d coefficients");
  (void)ParityIndex(parity, d);
  ComplexVector v = ComplexVector::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) v(static_cast<long>(i) * d + oplus(i, parity, d)) = alphas[static_cast<std::size_t>(i)];
  return v;
}

}  // namespace duoc
