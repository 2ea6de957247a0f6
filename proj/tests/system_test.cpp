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


#include "duoc/system.hpp"

#include "duoc/errors.hpp"
#include "duoc/sampling.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace duoc;
using duoc::testing::diff;
using duoc::testing::ket;

TEST(system, signature_layout) {
  const SystemSignature sig(3, 2, 1);
  EXPECT_EQ(sig.dimension(), 27);
  EXPECT_EQ(sig.factor_count(), 3);
  const auto order = sig.factor_order();
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0], (FactorTag{FactorKind::kClassical, 0}));
  EXPECT_EQ(order[1], (FactorTag{FactorKind::kClassical, 1}));
  EXPECT_EQ(order[2], (FactorTag{FactorKind::kAntiClassical, 0}));
  EXPECT_EQ(sig.kind(2), FactorKind::kAntiClassical);
}

TEST(system, signature_rejects_bad_arguments) {
  EXPECT_THROW(SystemSignature(1, 1, 1), DomainError);
  EXPECT_THROW(SystemSignature(2, -1, 1), DomainError);
  EXPECT_THROW(SystemSignature(2, 0, 0), DomainError);
  EXPECT_THROW(SystemSignature(2, 7, 6), DomainError);
  EXPECT_NO_THROW(SystemSignature(2, 6, 6));
  EXPECT_THROW(SystemSignature(5, 3, 3), DomainError);
}

TEST(system, restrict_and_complement) {
  const SystemSignature sig(2, 2, 2);
  const std::vector<int> pos{1, 3};
  EXPECT_EQ(sig.restrict_to(pos), SystemSignature(2, 1, 1));
  EXPECT_EQ(sig.complement(pos), (std::vector<int>{0, 2}));
}

TEST(system, parity_index_range) {
  EXPECT_THROW(ParityIndex(2, 2), DomainError);
  EXPECT_THROW(ParityIndex(-1, 3), DomainError);
  EXPECT_EQ(ParityIndex(2, 3).value(), 2);
}

TEST(system, parity_projector_bits) {
  const ComplexOperator p0 = parity_projector(2, ParityIndex(0, 2));
  const ComplexOperator p1 = parity_projector(2, ParityIndex(1, 2));
  EXPECT_EQ(diff(p0, projector(ket({0, 0})) + projector(ket({1, 1}))), 0.0);
  EXPECT_EQ(diff(p1, projector(ket({0, 1})) + projector(ket({1, 0}))), 0.0);
}

TEST(system, parity_projector_d3_enumeration) {
  const ComplexOperator p2 = parity_projector(3, ParityIndex(2, 3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ComplexVector v = ket({i, j}, 3);
      const bool in_sector = (i + 2) % 3 == j;
      EXPECT_LT(diff(p2 * v, in_sector ? v : ComplexVector::Zero(9)), 1e-15) << i << j;
    }
  }
  EXPECT_LT(diff(p2 * ket({1, 0}, 3), ket({1, 0}, 3)), 1e-15);
}

TEST(system, parity_projectors_resolve_identity) {
  for (int d : {2, 3, 5}) {
    ComplexOperator sum = ComplexOperator::Zero(d * d, d * d);
    for (int k = 0; k < d; ++k) {
      const ComplexOperator pk = parity_projector(d, ParityIndex(k, d));
      EXPECT_TRUE(is_hermitian(pk));
      EXPECT_NEAR(pk.trace().real(), d, 1e-12);
      for (int k2 = 0; k2 < d; ++k2) {
        const ComplexOperator pk2 = parity_projector(d, ParityIndex(k2, d));
        EXPECT_LT(diff(pk * pk2, k == k2 ? pk : ComplexOperator::Zero(d * d, d * d)), 1e-12);
      }
      sum += pk;
    }
    EXPECT_LT(diff(sum, ComplexOperator::Identity(d * d, d * d)), 1e-12);
  }
}

TEST(system, embed_identity_permutation) {
  const SystemSignature sig(3, 1, 2);
  EXPECT_EQ(diff(embed_permutation(sig, FactorPermutation::identity(1, 2)),
                 ComplexOperator::Identity(27, 27)),
            0.0);
}

TEST(system, embed_swap_of_bits) {
  const SystemSignature sig(2, 2, 0);
  const ComplexOperator u = embed_permutation(sig, {{1, 0}, {}});
  EXPECT_EQ(diff(u * ket({0, 1}), ket({1, 0})), 0.0);
}

TEST(system, embed_swap_on_two_two_composite) {
  const SystemSignature sig(2, 2, 2);
  const ComplexOperator u = embed_permutation(sig, {{1, 0}, {0, 1}});
  EXPECT_EQ(diff(u * ket({0, 1, 1, 0}), ket({1, 0, 1, 0})), 0.0);
  for (int idx = 0; idx < 16; ++idx) {
    const int d1 = (idx >> 3) & 1;
    const int d2 = (idx >> 2) & 1;
    const int a1 = (idx >> 1) & 1;
    const int a2 = idx & 1;
    const int expected = (d2 << 3) | (d1 << 2) | (a1 << 1) | a2;
    EXPECT_EQ(diff(u * basis_vector(16, idx), basis_vector(16, expected)), 0.0) << idx;
  }
}

TEST(system, embed_never_mixes_kinds) {
  const SystemSignature sig(2, 2, 2);
  const ComplexOperator u = embed_permutation(sig, {{1, 0}, {1, 0}});
  EXPECT_EQ(diff(u * ket({1, 0, 0, 1}), ket({0, 1, 1, 0})), 0.0);
  EXPECT_THROW(embed_permutation(sig, {{0, 1, 2}, {0, 1}}), DomainError);
  EXPECT_THROW(embed_permutation(sig, {{0, 0}, {0, 1}}), DomainError);
}

TEST(system, embed_is_unitary_and_composes) {
  const SystemSignature sig(2, 3, 2);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FactorPermutation p1{random_permutation(3, rng), random_permutation(2, rng)};
    const FactorPermutation p2{random_permutation(3, rng), random_permutation(2, rng)};
    const ComplexOperator u1 = embed_permutation(sig, p1);
    const ComplexOperator u2 = embed_permutation(sig, p2);
    EXPECT_LT(diff(u1.adjoint() * u1, ComplexOperator::Identity(32, 32)), 1e-15);
    EXPECT_LT(diff(embed_permutation(sig, compose(p2, p1)), u2 * u1), 1e-15);
    EXPECT_LT(diff(embed_permutation(sig, p1.inverse()), u1.adjoint()), 1e-15);
  }
}

TEST(system, sector_of_basis_pair) {
  EXPECT_EQ(sector_of_basis_pair(2, 0, 0).value(), 0);
  EXPECT_EQ(sector_of_basis_pair(2, 1, 0).value(), 1);
  EXPECT_EQ(sector_of_basis_pair(5, 3, 1).value(), 3);
  EXPECT_EQ(oplus(3, 3, 5), 1);
  for (int d : {2, 3, 4, 5}) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) EXPECT_EQ(oplus(i, sector_of_basis_pair(d, i, j).value(), d), j);
    }
  }
}
