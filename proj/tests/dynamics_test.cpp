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


#include "duoc/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "duoc/errors.hpp"
#include "duoc/sampling.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace duoc;
using duoc::testing::diag;
using duoc::testing::diff;
using duoc::testing::ket;

namespace {

const SystemSignature kPair(2, 1, 1);
const ComplexVector kPhi = (ket({0, 0}) + ket({1, 1})) / std::sqrt(2.0);

Effect raw(const SystemSignature& sig, ComplexOperator op) { return Effect{sig, std::move(op), std::nullopt}; }

ReversibleSpec random_reversible(const SystemSignature& sig, Rng& rng) {
  ReversibleSpec spec{FactorPermutation{random_permutation(sig.classical(), rng),
                                        random_permutation(sig.anticlassical(), rng)},
                      {}, {}};
  for (int f = 0; f < sig.factor_count(); ++f) {
    spec.x_shifts.push_back(rng.below(sig.local_dim()));
    spec.z_phases.push_back(rng.below(sig.local_dim()));
  }
  return spec;
}

SystemSignature random_signature(Rng& rng) {
  int m = rng.below(3);
  const int n = rng.below(3);
  if (m + n == 0) m = 1;
  return SystemSignature(2 + rng.below(2), m, n);
}

}  // namespace

TEST(dynamics, generalized_paulis) {
  ComplexOperator flip = ComplexOperator::Zero(2, 2);
  flip(0, 1) = flip(1, 0) = 1.0;
  EXPECT_EQ(diff(generalized_x(2, 1), flip), 0.0);
  EXPECT_LT(diff((generalized_x(3, 1) * ket({2}, 3)).eval(), ket({0}, 3)), 1e-15);
  EXPECT_LT(diff((generalized_z(3, 1) * ket({2}, 3)).eval(), ket({2}, 3)), 1e-15);
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_LT(std::abs((generalized_z(3, 1) * ket({0}, 3))(0) - w), 1e-15);
  EXPECT_LT(diff(generalized_z(2, 0), diag({1, -1})), 1e-15);
}

TEST(dynamics, reversible_examples) {
  const ReversibleSpec flip_anti{FactorPermutation::identity(1, 1), {0, 1}, {0, 0}};
  const ComplexOperator u = build_reversible(flip_anti, kPair);
  const ComplexVector out = u * kPhi;
  EXPECT_LT(diff(out, ((ket({0, 1}) + ket({1, 0})) / std::sqrt(2.0)).eval()), 1e-15);
  const auto report = validate_pure_state(out, kPair);
  ASSERT_TRUE(report.valid);
  EXPECT_EQ(report.spec->parity, std::vector<int>{1});

  // Z^0 is diag(1, -1) on a bit, so |01> picks up a sign before the swap.
  const ReversibleSpec swap{{{1, 0}, {}}, {0, 0}, {0, 0}};
  EXPECT_LT(diff((build_reversible(swap, SystemSignature(2, 2, 0)) * ket({0, 1})).eval(), (-ket({1, 0})).eval()),
            1e-15);

  const ReversibleSpec short_x{FactorPermutation::identity(1, 1), {1}, {0, 0}};
  EXPECT_THROW(build_reversible(short_x, kPair), DomainError);
  const ReversibleSpec big_z{FactorPermutation::identity(1, 1), {0, 0}, {0, 2}};
  EXPECT_THROW(build_reversible(big_z, kPair), DomainError);
}

TEST(dynamics, reversible_maps_are_unitary_and_keep_validity) {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const SystemSignature sig = random_signature(rng);
    const ComplexOperator u = build_reversible(random_reversible(sig, rng), sig);
    const auto id = ComplexOperator::Identity(sig.dimension(), sig.dimension());
    ASSERT_LT(diff((u.adjoint() * u).eval(), id), 1e-12);
    const ComplexVector v = u * build_pure_state(random_pure_spec(sig, rng));
    const auto report = validate_pure_state(v, sig);
    EXPECT_TRUE(report.valid) << sig.to_string() << " " << report.witness;
  }
}

TEST(dynamics, shifts_compose_additively) {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + rng.below(4);
    const int a = rng.below(d);
    const int b = rng.below(d);
    EXPECT_LT(diff((generalized_x(d, a) * generalized_x(d, b)).eval(), generalized_x(d, oplus(a, b, d))), 1e-14);
  }
}

TEST(dynamics, anti_shift_moves_parity) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + rng.below(2);
    const SystemSignature sig(d, 1, 1);
    const PureStateSpec spec = random_pure_spec(sig, rng);
    const int j = rng.below(d);
    const int zs = rng.below(d);
    const ReversibleSpec shift{FactorPermutation::identity(1, 1), {0, j}, {zs, rng.below(d)}};
    const auto report = validate_pure_state(build_reversible(shift, sig) * build_pure_state(spec), sig);
    ASSERT_TRUE(report.valid);
    EXPECT_EQ(report.spec->parity[0], oplus(spec.parity[0], j, d));

    const ReversibleSpec phase{FactorPermutation::identity(1, 1), {0, 0}, {zs, rng.below(d)}};
    const auto kept = validate_pure_state(build_reversible(phase, sig) * build_pure_state(spec), sig);
    ASSERT_TRUE(kept.valid);
    EXPECT_EQ(kept.spec->parity[0], spec.parity[0]);
  }
}

TEST(dynamics, classical_channels) {
  ClassicalChannel bsc{RealMatrix(2, 2)};
  bsc.cond_prob << 0.9, 0.1, 0.1, 0.9;
  const SystemSignature bit(2, 1, 0);
  EXPECT_LT(diff(classical_channel_map(bsc, DensityState(bit, diag({1, 0}))).matrix(), diag({0.9, 0.1})), 1e-15);

  const ClassicalChannel twice = compose(bsc, bsc);
  EXPECT_NEAR(twice.cond_prob(1, 0), 0.18, 1e-15);
  EXPECT_NEAR(twice.cond_prob(0, 0), 0.82, 1e-15);
  const auto step = classical_channel_map(bsc, classical_channel_map(bsc, DensityState(bit, diag({0.3, 0.7}))));
  EXPECT_LT(diff(classical_channel_map(twice, DensityState(bit, diag({0.3, 0.7}))).matrix(), step.matrix()), 1e-15);

  ClassicalChannel bad{RealMatrix(2, 2)};
  bad.cond_prob << 0.9, 0.1, 0.2, 0.9;
  EXPECT_THROW(check_channel(bad), DomainError);
  ComplexOperator coherent = diag({0.5, 0.5});
  coherent(0, 1) = coherent(1, 0) = 0.5;
  EXPECT_THROW(classical_channel_map(bsc, DensityState(bit, coherent)), NotClassicalError);
  EXPECT_THROW(classical_channel_map(bsc, DensityState::pure(kPair, kPhi)), NotClassicalError);
}

TEST(dynamics, prepare_and_discard) {
  ConditionalEvolutionSpec spec{DensityState::pure(kPair, kPhi), Effect::identity(SystemSignature(2, 1, 0)), {}};
  const auto r = conditional_evolution(spec, DensityState(SystemSignature(2, 1, 0), diag({0.2, 0.8})));
  EXPECT_NEAR(r.probability, 1.0, 1e-15);
  ASSERT_TRUE(r.out.has_value());
  EXPECT_EQ(r.out->signature(), kPair);
  EXPECT_LT(diff(r.out->matrix(), projector(kPhi)), 1e-15);
}

TEST(dynamics, teleportation_through_a_pair) {
  const SystemSignature anti(2, 0, 1);
  const DensityState rho(anti, diag({0.3, 0.7}));
  ConditionalEvolutionSpec bell{DensityState::pure(kPair, kPhi), raw(kPair, projector(kPhi)), {0}};
  const auto r = conditional_evolution(bell, rho);
  EXPECT_NEAR(r.probability, 0.25, 1e-15);
  ASSERT_TRUE(r.out.has_value());
  EXPECT_EQ(r.out->signature(), anti);
  EXPECT_LT(diff(r.out->matrix(), rho.matrix()), 1e-15);

  ConditionalEvolutionSpec sector{DensityState::pure(kPair, kPhi), raw(kPair, parity_projector(2, ParityIndex(0, 2))),
                                  {0}};
  const auto s = conditional_evolution(sector, rho);
  EXPECT_NEAR(s.probability, 0.5, 1e-15);
  EXPECT_LT(diff(s.out->matrix(), rho.matrix()), 1e-15);
}

TEST(dynamics, annihilating_effect) {
  ConditionalEvolutionSpec spec{DensityState::pure(kPair, kPhi), raw(kPair, ComplexOperator::Zero(4, 4)), {0}};
  const auto r = conditional_evolution(spec, DensityState(SystemSignature(2, 0, 1), diag({0.5, 0.5})));
  EXPECT_EQ(r.probability, 0.0);
  EXPECT_FALSE(r.out.has_value());
}

TEST(dynamics, wiring_errors) {
  ConditionalEvolutionSpec spec{DensityState::pure(kPair, kPhi), raw(kPair, projector(kPhi)), {0, 1}};
  EXPECT_THROW(conditional_evolution(spec, DensityState(SystemSignature(2, 0, 1), diag({1, 0}))), DomainError);
  spec.c_factors = {1};
  EXPECT_THROW(conditional_evolution(spec, DensityState(SystemSignature(2, 0, 1), diag({1, 0}))), DomainError);
}

TEST(dynamics, evolution_never_increases_trace) {
  Rng rng(44);
  for (int t = 0; t < 500; ++t) {
    const int d = 2 + rng.below(2);
    const SystemSignature input(d, rng.below(2), 1);
    const SystemSignature anc(d, 1, 1);
    const auto rho = random_mixed_state(input, 1 + rng.below(2), rng);
    const std::vector<int> c{rng.below(2)};
    const SystemSignature esig(d, input.classical() + (c[0] == 0 ? 1 : 0), input.anticlassical() + (c[0] == 1 ? 1 : 0));
    std::vector<EffectTerm> terms;
    double budget = rng.uniform(0.1, 1.0);
    for (int k = 0; k < 2; ++k) {
      const double w = k == 1 ? budget : budget * rng.uniform();
      budget -= w;
      terms.push_back({w, random_pure_spec(esig, rng)});
    }
    ConditionalEvolutionSpec spec{random_mixed_state(anc, 2, rng), Effect::from_terms(esig, terms), c};
    const auto r = conditional_evolution(spec, rho);
    ASSERT_LE(r.probability, 1 + 1e-12);
    if (!r.out) continue;
    const auto report = validate_mixed_state(*r.out);
    EXPECT_TRUE(report.valid) << report.witness;
  }
}

TEST(dynamics, choi_of_identity) {
  const LinearMap id = [](const ComplexOperator& x) { return x; };
  const ComplexOperator choi = choi_matrix(id, 2, 2);
  EXPECT_LT(diff(choi, (2.0 * projector(kPhi)).eval()), 1e-15);
}

TEST(dynamics, transpose_is_not_completely_positive) {
  const LinearMap transpose = [](const ComplexOperator& x) { return ComplexOperator(x.transpose()); };
  const auto report = validate_transformation(transpose, kPair, kPair);
  EXPECT_FALSE(report.valid);
  EXPECT_NE(report.witness.find("completely positive"), std::string::npos);
}

TEST(dynamics, reversible_and_evolution_maps_are_valid) {
  Rng rng(45);
  for (int t = 0; t < 10; ++t) {
    const SystemSignature sig(2, 1, 1 + rng.below(2));
    const ComplexOperator u = build_reversible(random_reversible(sig, rng), sig);
    const LinearMap conj = [u](const ComplexOperator& x) { return ComplexOperator(u * x * u.adjoint()); };
    const auto report = validate_transformation(conj, sig, sig, {20, static_cast<unsigned long long>(t + 1)});
    EXPECT_TRUE(report.valid) << report.witness;
    EXPECT_EQ(report.certainty, Certainty::kSampled);
  }
  ConditionalEvolutionSpec bell{DensityState::pure(kPair, kPhi), raw(kPair, projector(kPhi)), {0}};
  const SystemSignature anti(2, 0, 1);
  EXPECT_TRUE(validate_transformation(as_linear_map(bell, anti), anti, output_signature(bell)).valid);
}
