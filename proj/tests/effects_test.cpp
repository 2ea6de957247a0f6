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


#include "duoc/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "duoc/errors.hpp"
#include "duoc/oracle.hpp"
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

Effect random_certified_effect(const SystemSignature& sig, Rng& rng) {
  std::vector<EffectTerm> terms;
  const int count = 1 + rng.below(3);
  double budget = rng.uniform(0.2, 1.0);
  for (int i = 0; i < count; ++i) {
    const double w = i + 1 == count ? budget : budget * rng.uniform();
    budget -= w;
    terms.push_back({w, random_pure_spec(sig, rng)});
  }
  return Effect::from_terms(sig, std::move(terms));
}

std::vector<int> random_subset(int factors, Rng& rng) {
  std::vector<int> s;
  while (s.empty() || static_cast<int>(s.size()) == factors) {
    s.clear();
    const int mask = rng.below(1 << factors);
    for (int f = 0; f < factors; ++f) {
      if (mask & (1 << f)) s.push_back(f);
    }
  }
  return s;
}

SystemSignature sub_signature(const SystemSignature& sig, const std::vector<int>& subset) {
  return sig.restrict_to(subset);
}

}  // namespace

TEST(effects, validate_examples) {
  EXPECT_TRUE(validate_effect(Effect::identity(kPair)).valid);
  EXPECT_TRUE(validate_effect(raw(kPair, projector(kPhi))).valid);
  EXPECT_TRUE(validate_effect(raw(kPair, 0.5 * projector(kPhi))).valid);
  EXPECT_TRUE(validate_effect(raw(kPair, ComplexOperator::Zero(4, 4))).valid);

  const ComplexVector cross = (ket({0, 0}) + ket({0, 1})) / std::sqrt(2.0);
  const auto bad = validate_effect(raw(kPair, projector(cross)));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.certainty, Certainty::kExact);

  EXPECT_FALSE(validate_effect(raw(kPair, 1.5 * projector(kPhi))).valid);
  EXPECT_FALSE(validate_effect(raw(kPair, -projector(kPhi))).valid);
  EXPECT_THROW(validate_effect(raw(kPair, diag({1, 0}))), ShapeError);
}

TEST(effects, certificate_terms) {
  const PureStateSpec phi{kPair, FactorPermutation::identity(1, 1),
                          {{{0}, std::sqrt(0.5)}, {{1}, std::sqrt(0.5)}}, {0}, {}};
  const Effect e = Effect::from_terms(kPair, {{0.7, phi}});
  EXPECT_LT(diff(e.op, 0.7 * projector(kPhi)), 1e-15);
  EXPECT_TRUE(validate_effect(e).valid);

  const SystemSignature wide(2, 2, 3);
  ASSERT_FALSE(has_exact_sector_test(wide));
  Rng rng(30);
  const Effect w = Effect::from_terms(wide, {{0.4, random_pure_spec(wide, rng)}, {0.5, random_pure_spec(wide, rng)}});
  const auto report = validate_effect(w);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.certainty, Certainty::kCertificate);
  EXPECT_THROW(Effect::from_terms(kPair, {{-0.1, phi}}), DomainError);
}

TEST(effects, povm_checks) {
  const Effect e0 = raw(SystemSignature(2, 1, 0), diag({1, 0}));
  const Effect e1 = raw(SystemSignature(2, 1, 0), diag({0, 1}));
  const Povm basis({e0, e1});
  EXPECT_TRUE(validate_povm(basis).valid);
  EXPECT_THROW(Povm({e0}), DomainError);
  EXPECT_THROW(Povm({e0, raw(kPair, ComplexOperator::Identity(4, 4))}), DomainError);
  EXPECT_THROW(Povm(std::vector<Effect>{}), DomainError);
}

TEST(effects, born_examples) {
  const Povm basis({raw(SystemSignature(2, 1, 0), diag({1, 0})), raw(SystemSignature(2, 1, 0), diag({0, 1}))});
  const auto p = born_probabilities(basis, DensityState(SystemSignature(2, 1, 0), diag({0.25, 0.75})));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 0.25, 1e-15);
  EXPECT_NEAR(p[1], 0.75, 1e-15);

  const auto w = born_probabilities(witness_povm(0.5, ParityIndex(0, 2)), DensityState::pure(kPair, kPhi));
  EXPECT_NEAR(w[0], 1.0, 1e-15);
  EXPECT_NEAR(w[1], 0.0, 1e-15);

  EXPECT_THROW(born_probabilities(basis, DensityState::pure(kPair, kPhi)), DomainError);
}

TEST(effects, born_is_affine) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const SystemSignature sig(2 + rng.below(2), 1 + rng.below(2), rng.below(2));
    const auto a = random_mixed_state(sig, 2, rng);
    const auto b = random_mixed_state(sig, 2, rng);
    const Effect e = random_certified_effect(sig, rng);
    ComplexOperator rest = ComplexOperator::Identity(sig.dimension(), sig.dimension()) - e.op;
    const Povm povm({e, raw(sig, rest)});
    const double w = rng.uniform();
    const DensityState mix(sig, w * a.matrix() + (1 - w) * b.matrix());
    const auto pa = born_probabilities(povm, a);
    const auto pb = born_probabilities(povm, b);
    const auto pm = born_probabilities(povm, mix);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(pm[i], w * pa[i] + (1 - w) * pb[i], 1e-12);
    EXPECT_NEAR(pm[0] + pm[1], 1.0, 1e-12);
    EXPECT_GE(pm[0], -1e-12);
  }
}

TEST(effects, trace_of_product_matches_dense) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_mixed_state(SystemSignature(3, 1, 1), 3, rng).matrix();
    const auto b = random_mixed_state(SystemSignature(3, 1, 1), 2, rng).matrix();
    EXPECT_NEAR(trace_of_product(a, b), (a * b).trace().real(), 1e-14);
  }
}

TEST(effects, conditional_examples) {
  const std::vector<int> dit{0};
  const Effect zero = raw(SystemSignature(2, 1, 0), diag({1, 0}));
  const auto r = conditional_state(DensityState::pure(kPair, kPhi), zero, dit);
  EXPECT_NEAR(r.probability, 0.5, 1e-15);
  ASSERT_TRUE(r.post.has_value());
  EXPECT_EQ(r.post->signature(), SystemSignature(2, 0, 1));
  EXPECT_LT(diff(r.post->matrix(), diag({1, 0})), 1e-15);

  const Effect never = raw(SystemSignature(2, 1, 0), ComplexOperator::Zero(2, 2));
  const auto z = conditional_state(DensityState::pure(kPair, kPhi), never, dit);
  EXPECT_EQ(z.probability, 0.0);
  EXPECT_FALSE(z.post.has_value());

  EXPECT_THROW(conditional_state(DensityState::pure(kPair, kPhi), zero, std::vector<int>{}), DomainError);
  EXPECT_THROW(conditional_state(DensityState::pure(kPair, kPhi), zero, std::vector<int>{0, 1}), DomainError);
  EXPECT_THROW(conditional_state(DensityState::pure(kPair, kPhi), zero, std::vector<int>{1}), DomainError);
}

TEST(effects, conditional_swaps_pairs) {
  // Phi on (D1,A1) and on (D2,A2); measuring Phi on (D2,A1) leaves Phi on (D1,A2).
  const SystemSignature sig(2, 2, 2);
  const std::vector<int> to_canonical{0, 2, 1, 3};
  const std::vector<int> dims{2, 2, 2, 2};
  const ComplexVector copies = tensor_product(kPhi, kPhi);
  const ComplexVector psi = permute_factors(copies, dims, to_canonical);
  const std::vector<int> middle{1, 2};
  const auto r = conditional_state(DensityState::pure(sig, psi), raw(kPair, projector(kPhi)), middle);
  EXPECT_NEAR(r.probability, 0.25, 1e-15);
  ASSERT_TRUE(r.post.has_value());
  EXPECT_EQ(r.post->signature(), kPair);
  EXPECT_LT(diff(r.post->matrix(), projector(kPhi)), 1e-14);
}

TEST(effects, witness_examples) {
  const auto povm = witness_povm(0.3, ParityIndex(0, 2));
  EXPECT_TRUE(validate_povm(povm).valid);
  const ComplexVector target = witness_target(0.3, ParityIndex(0, 2));
  EXPECT_LT(diff(target, (std::sqrt(0.3) * ket({0, 0}) + std::sqrt(0.7) * ket({1, 1})).eval()), 1e-15);
  const auto yes = born_probabilities(povm, DensityState::pure(kPair, target));
  EXPECT_NEAR(yes[0], 1.0, 1e-14);

  const ComplexVector odd = witness_target(0.4, ParityIndex(1, 2));
  EXPECT_LT(diff(odd, (std::sqrt(0.4) * ket({0, 1}) + std::sqrt(0.6) * ket({1, 0})).eval()), 1e-15);
  EXPECT_TRUE(validate_povm(witness_povm(0.4, ParityIndex(1, 2))).valid);

  EXPECT_THROW(witness_povm(0.0, ParityIndex(0, 2)), DomainError);
  EXPECT_THROW(witness_povm(1.0, ParityIndex(0, 2)), DomainError);
  EXPECT_THROW(witness_povm(0.5, ParityIndex(0, 3)), DomainError);
}

TEST(effects, worst_case_separable) {
  for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.9}) {
    const auto w = worst_case_no_probability(p, 0.01);
    EXPECT_NEAR(w.min_p_no, std::min(p, 1 - p), 1e-12) << p;
    EXPECT_NEAR(w.min_p_no, oracle::separable_grid_min(p), 1e-12) << p;
    const auto rho = build_separable(w.argmin, kPair);
    const auto probs = born_probabilities(witness_povm(p, ParityIndex(0, 2)), rho);
    EXPECT_NEAR(probs[1], w.min_p_no, 1e-12);
    EXPECT_GT(w.min_p_no, 0.0);
  }
  EXPECT_NEAR(worst_case_no_probability(0.3, 0.01, 1).min_p_no, 0.3, 1e-12);
  EXPECT_THROW(worst_case_no_probability(0.3, 0.5), DomainError);
}

TEST(effects, conditional_posts_are_valid) {
  Rng rng(33);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const int m = rng.below(3);
    const int n = rng.below(3);
    if (m + n < 2) continue;
    const SystemSignature sig(2 + rng.below(2), m, n);
    const auto rho = random_mixed_state(sig, 1 + rng.below(3), rng);
    const auto subset = random_subset(sig.factor_count(), rng);
    const Effect e = random_certified_effect(sub_signature(sig, subset), rng);
    const auto r = conditional_state(rho, e, subset);
    ASSERT_GE(r.probability, -1e-12);
    ASSERT_LE(r.probability, 1 + 1e-12);
    if (!r.post) continue;
    ++checked;
    EXPECT_NEAR(r.post->matrix().trace().real(), 1.0, 1e-10);
    const auto report = validate_mixed_state(*r.post);
    EXPECT_TRUE(report.valid) << sig.to_string() << " " << report.witness;
  }
  EXPECT_GT(checked, 500);
}

TEST(effects, conditional_matches_direct_contraction) {
  Rng rng(34);
  for (int t = 0; t < 500; ++t) {
    const int m = rng.below(3);
    const int n = rng.below(3);
    if (m + n < 2) {
      --t;
      continue;
    }
    const SystemSignature sig(2 + rng.below(2), m, n);
    const auto rho = random_mixed_state(sig, 1 + rng.below(3), rng);
    const auto subset = random_subset(sig.factor_count(), rng);
    const Effect e = random_certified_effect(sub_signature(sig, subset), rng);
    const auto r = conditional_state(rho, e, subset);
    const auto c = oracle::conditional_contraction(rho.matrix(), sig, e.op, subset);
    EXPECT_NEAR(r.probability, c.probability, 1e-12);
    if (r.post) EXPECT_LT(diff((r.probability * r.post->matrix()).eval(), c.unnormalized_post), 1e-12);
  }
}
