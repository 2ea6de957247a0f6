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


#include "duoc/tensor.hpp"

#include "duoc/errors.hpp"
#include "duoc/sampling.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace duoc;
using duoc::testing::diff;
using duoc::testing::ket;

namespace {

ComplexOperator random_matrix(long dim, Rng& rng) {
  ComplexOperator m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) m(r, c) = rng.complex_normal();
  }
  return m;
}

ComplexOperator random_hermitian(long dim, Rng& rng) {
  const ComplexOperator m = random_matrix(dim, rng);
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST(tensor, product_of_basis_kets) {
  const ComplexVector v = tensor_product(ket({0}), ket({1}));
  ASSERT_EQ(v.size(), 4);
  EXPECT_EQ(diff(v, basis_vector(4, 1)), 0.0);
}

TEST(tensor, product_of_identities) {
  const ComplexOperator id = tensor_product(ComplexOperator::Identity(2, 2), ComplexOperator::Identity(2, 2));
  EXPECT_EQ(diff(id, ComplexOperator::Identity(4, 4)), 0.0);
}

TEST(tensor, x_tensor_x_flips_both_bits) {
  ComplexOperator x(2, 2);
  x << 0, 1, 1, 0;
  const ComplexOperator xx = tensor_product(x, x);
  const ComplexVector in = ket({0, 0});
  ComplexVector out = ComplexVector::Zero(4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r) += xx(r, c) * in(c);
  }
  EXPECT_EQ(diff(out, ket({1, 1})), 0.0);
  EXPECT_EQ(diff(xx * in, ket({1, 1})), 0.0);
}

TEST(tensor, product_index_convention) {
  Rng rng(3);
  const ComplexOperator a = random_matrix(2, rng);
  const ComplexOperator b = random_matrix(3, rng);
  const ComplexOperator ab = tensor_product(a, b);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) EXPECT_EQ(ab(i * 3 + k, j * 3 + l), a(i, j) * b(k, l));
      }
    }
  }
}

TEST(tensor, product_is_associative) {
  Rng rng(4);
  const ComplexOperator a = random_matrix(2, rng);
  const ComplexOperator b = random_matrix(3, rng);
  const ComplexOperator c = random_matrix(2, rng);
  EXPECT_LT(diff(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c))), 1e-15);
}

TEST(tensor, partial_trace_of_bell_state) {
  const ComplexVector phi = (ket({0, 0}) + ket({1, 1})) / std::sqrt(2.0);
  const std::vector<int> dims{2, 2};
  const std::vector<int> keep{0};
  EXPECT_LT(diff(partial_trace(projector(phi), dims, keep), ComplexOperator::Identity(2, 2) / 2.0), 1e-15);
}

TEST(tensor, partial_trace_of_product) {
  Rng rng(5);
  const ComplexOperator rho = random_hermitian(3, rng);
  const ComplexOperator sigma = random_hermitian(2, rng);
  const std::vector<int> dims{3, 2};
  const std::vector<int> keep{0};
  EXPECT_LT(diff(partial_trace(tensor_product(rho, sigma), dims, keep), rho * sigma.trace()), 1e-12);
  const std::vector<int> keep_second{1};
  EXPECT_LT(diff(partial_trace(tensor_product(rho, sigma), dims, keep_second), sigma * rho.trace()), 1e-12);
}

TEST(tensor, partial_trace_of_entangled_pair) {
  const ComplexVector psi = std::sqrt(0.3) * ket({0, 0}) + std::sqrt(0.7) * ket({1, 1});
  const std::vector<int> dims{2, 2};
  const std::vector<int> keep{1};
  EXPECT_LT(diff(partial_trace(projector(psi), dims, keep), duoc::testing::diag({0.3, 0.7})), 1e-15);
}

TEST(tensor, partial_trace_dimension_mismatch) {
  const std::vector<int> dims{2, 3};
  const std::vector<int> keep{0};
  EXPECT_THROW(partial_trace(ComplexOperator::Identity(4, 4), dims, keep), ShapeError);
}

TEST(tensor, partial_trace_keeps_factor_order) {
  Rng rng(6);
  const ComplexOperator a = random_hermitian(2, rng);
  const ComplexOperator b = random_hermitian(3, rng);
  const ComplexOperator c = ComplexOperator::Identity(2, 2) / 2.0;
  const std::vector<int> dims{2, 3, 2};
  const std::vector<int> keep{0, 1};
  const ComplexOperator abc = tensor_product(tensor_product(a, b), c);
  EXPECT_LT(diff(partial_trace(abc, dims, keep), tensor_product(a, b)), 1e-12);
}

TEST(tensor, partial_trace_preserves_trace_and_is_linear) {
  Rng rng(7);
  const std::vector<int> dims{2, 3, 2};
  const std::vector<std::vector<int>> keeps{{0}, {1}, {2}, {0, 2}, {1, 2}, {}};
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexOperator h = random_hermitian(12, rng);
    const ComplexOperator g = random_hermitian(12, rng);
    const auto& keep = keeps[static_cast<std::size_t>(trial) % keeps.size()];
    const ComplexOperator out = partial_trace(h, dims, keep);
    ASSERT_LT(std::abs(out.trace() - h.trace()), 1e-12);
    const Complex s(0.3, -1.2);
    ASSERT_LT(diff(partial_trace((h + s * g).eval(), dims, keep), out + s * partial_trace(g, dims, keep)), 1e-12);
  }
}

TEST(tensor, partial_trace_cyclic_in_traced_factor) {
  Rng rng(8);
  const std::vector<int> dims{2, 3};
  const std::vector<int> keep{0};
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexOperator rho = random_hermitian(6, rng);
    const ComplexOperator m = random_matrix(3, rng);
    const ComplexOperator im = tensor_product(ComplexOperator::Identity(2, 2), m);
    ASSERT_LT(diff(partial_trace((rho * im).eval(), dims, keep), partial_trace((im * rho).eval(), dims, keep)), 1e-12);
  }
}

TEST(tensor, projector_examples) {
  EXPECT_EQ(diff(projector(ket({0})), duoc::testing::diag({1, 0})), 0.0);
  const ComplexVector plus = (ket({0}) + ket({1})) / std::sqrt(2.0);
  EXPECT_LT(diff(projector(plus), ComplexOperator::Constant(2, 2, 0.5)), 1e-15);
  EXPECT_LT(diff(projector((2.0 * ket({0})).eval()), duoc::testing::diag({1, 0})), 1e-15);
}

TEST(tensor, projector_is_rank_one_idempotent) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector v = 3.0 * random_unit_vector(5, rng);
    const ComplexOperator p = projector(v);
    EXPECT_TRUE(is_hermitian(p));
    EXPECT_LT(diff(p * p, p), 1e-12);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
  }
}

TEST(tensor, projector_of_zero_vector) {
  EXPECT_THROW(projector(ComplexVector::Zero(3)), DegenerateInputError);
}

TEST(tensor, permute_factors_moves_digits) {
  const std::vector<int> dims{2, 3, 2};
  const std::vector<int> order{2, 0, 1};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 2; ++c) {
        const ComplexVector in = basis_vector(12, (a * 3 + b) * 2 + c);
        const ComplexVector out = permute_factors(in, dims, order);
        EXPECT_EQ(diff(out, basis_vector(12, (c * 2 + a) * 3 + b)), 0.0);
      }
    }
  }
}

TEST(tensor, embed_and_contract) {
  Rng rng(10);
  const std::vector<int> dims{2, 3, 2};
  const std::vector<int> factors{0, 2};
  const ComplexOperator m = random_matrix(4, rng);
  const ComplexOperator embedded = embed_on_factors(m, dims, factors);
  const std::vector<int> grouped{2, 2, 3};
  const ComplexOperator expected =
      permute_operator_factors(tensor_product(m, ComplexOperator::Identity(3, 3)), grouped, std::vector<int>{0, 2, 1});
  EXPECT_LT(diff(embedded, expected), 1e-14);

  const ComplexVector psi = random_unit_vector(12, rng);
  const ComplexVector bra = random_unit_vector(4, rng);
  const ComplexVector out = contract_factors(psi, dims, factors, bra);
  for (int b = 0; b < 3; ++b) {
    Complex acc = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int c = 0; c < 2; ++c) acc += std::conj(bra(a * 2 + c)) * psi((a * 3 + b) * 2 + c);
    }
    EXPECT_LT(std::abs(out(b) - acc), 1e-14);
  }
}

TEST(tensor, real_scalar_instantiation) {
  RealMatrix a(2, 2);
  a << 1, 2, 3, 4;
  const RealMatrix aa = tensor_product(a, RealMatrix::Identity(2, 2));
  EXPECT_EQ(aa(2, 0), 3.0);
  const std::vector<int> dims{2, 2};
  const std::vector<int> keep{0};
  EXPECT_EQ(diff(partial_trace(aa, dims, keep), (2.0 * a).eval()), 0.0);
}
