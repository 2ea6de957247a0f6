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

#ifndef DUOC_TENSOR_HPP
#define DUOC_TENSOR_HPP

// Dense tensor-product substrate. The leftmost factor is the most
// significant digit of a flattened index everywhere in the library.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "duoc/errors.hpp"

namespace duoc {

using Complex = std::complex<double>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexVector = Vector<Complex>;
using ComplexOperator = Matrix<Complex>;
using RealVector = Vector<double>;
using RealMatrix = Matrix<double>;

/// Max-abs-entry tolerance used for Hermiticity, idempotence and similar
/// structural checks unless a caller passes its own.
inline constexpr double kStructuralTol = 1e-10;

/// Largest total Hilbert-space dimension the dense engine accepts.
inline constexpr long kMaxDimension = 4096;

namespace detail {

template <typename A, typename B>
inline constexpr int kron_cols =
    (A::ColsAtCompileTime == 1 && B::ColsAtCompileTime == 1) ? 1 : Eigen::Dynamic;

}  // namespace detail

/// Kronecker product with `a` as the most significant factor. Works for
/// column vectors (result is a vector) and for general matrices.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, detail::kron_cols<DerivedA, DerivedB>>
tensor_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result =
      Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, detail::kron_cols<DerivedA, DerivedB>>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Product of a list of factor dimensions.
inline long total_dimension(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L,
                         [](long acc, int d) { return acc * d; });
}

/// Row-major strides: stride of factor k is the product of dims after k.
inline std::vector<long> factor_strides(std::span<const int> dims) {
  std::vector<long> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * dims[k];
  }
  return strides;
}

/// Digits of a flattened index for the given factor dimensions.
inline std::vector<int> index_to_digits(long index, std::span<const int> dims) {
  std::vector<int> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % dims[k]);
    index /= dims[k];
  }
  return digits;
}

inline long digits_to_index(std::span<const int> digits, std::span<const int> dims) {
  long index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    index = index * dims[k] + digits[k];
  }
  return index;
}

namespace detail {

inline void check_factor_set(std::span<const int> factors, std::size_t count) {
  std::vector<bool> seen(count, false);
  for (int f : factors) {
    if (f < 0 || static_cast<std::size_t>(f) >= count) {
      throw ShapeError("factor index " + std::to_string(f) + " out of range");
    }
    if (seen[static_cast<std::size_t>(f)]) {
      throw ShapeError("factor index " + std::to_string(f) + " repeated");
    }
    seen[static_cast<std::size_t>(f)] = true;
  }
}

// Offsets into the full flattened space contributed by the digits of the
// listed factors, enumerated in row-major order over those factors.
inline std::vector<long> sub_offsets(std::span<const int> dims, std::span<const int> factors) {
  const auto strides = factor_strides(dims);
  std::vector<long> offsets{0};
  for (int f : factors) {
    std::vector<long> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dims[f]));
    for (long base : offsets) {
      for (int digit = 0; digit < dims[f]; ++digit) {
        next.push_back(base + digit * strides[f]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace detail

/// Trace over every factor not listed in `keep`. Kept factors retain their
/// relative order in the result.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& op,
                                               std::span<const int> dims,
                                               std::span<const int> keep) {
  const long dim = total_dimension(dims);
  if (op.rows() != dim || op.cols() != dim) {
    throw ShapeError("partial_trace: operator dimension " + std::to_string(op.rows()) +
                     " does not match factor dims product " + std::to_string(dim));
  }
  detail::check_factor_set(keep, dims.size());
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
    if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);
  }
  const auto keep_off = detail::sub_offsets(dims, kept);
  const auto trace_off = detail::sub_offsets(dims, traced);
  const auto n = static_cast<Eigen::Index>(keep_off.size());
  const auto& m = op.eval();
  Matrix<typename Derived::Scalar> out = Matrix<typename Derived::Scalar>::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      typename Derived::Scalar acc(0);
      for (long t : trace_off) {
        acc += m(keep_off[r] + t, keep_off[c] + t);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

/// Index map for reordering factors: result position k holds source factor
/// `order[k]`. Returns, for each source index, its destination index.
inline std::vector<long> factor_permutation_map(std::span<const int> dims,
                                                std::span<const int> order) {
  if (order.size() != dims.size()) {
    throw ShapeError("factor order length does not match factor count");
  }
  detail::check_factor_set(order, dims.size());
  std::vector<int> new_dims(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];
  const auto new_strides = factor_strides(new_dims);
  std::vector<long> dest_stride(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k) dest_stride[order[k]] = new_strides[k];

  const long dim = total_dimension(dims);
  std::vector<long> map(static_cast<std::size_t>(dim));
  for (long idx = 0; idx < dim; ++idx) {
    const auto digits = index_to_digits(idx, dims);
    long dest = 0;
    for (std::size_t f = 0; f < digits.size(); ++f) dest += digits[f] * dest_stride[f];
    map[static_cast<std::size_t>(idx)] = dest;
  }
  return map;
}

/// Reorders the tensor factors of a vector (`order[k]` is the source factor
/// placed at position k).
template <typename Derived>
Vector<typename Derived::Scalar> permute_factors(const Eigen::MatrixBase<Derived>& v,
                                                 std::span<const int> dims,
                                                 std::span<const int> order)
  requires(Derived::ColsAtCompileTime == 1)
{
  if (v.size() != total_dimension(dims)) {
    throw ShapeError("permute_factors: vector dimension does not match factor dims");
  }
  const auto map = factor_permutation_map(dims, order);
  const auto& src = v.eval();
  Vector<typename Derived::Scalar> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(map[static_cast<std::size_t>(i)]) = src(i);
  return out;
}

/// Operator version of `permute_factors`: returns P op P^dagger.
template <typename Derived>
Matrix<typename Derived::Scalar> permute_operator_factors(const Eigen::MatrixBase<Derived>& op,
                                                          std::span<const int> dims,
                                                          std::span<const int> order) {
  const long dim = total_dimension(dims);
  if (op.rows() != dim || op.cols() != dim) {
    throw ShapeError("permute_operator_factors: operator dimension mismatch");
  }
  const auto map = factor_permutation_map(dims, order);
  const auto& src = op.eval();
  Matrix<typename Derived::Scalar> out(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      out(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) = src(r, c);
    }
  }
  return out;
}

/// Acts with `sub` on the listed factors (in the listed order) and with the
/// identity on the rest.
template <typename Derived>
Matrix<typename Derived::Scalar> embed_on_factors(const Eigen::MatrixBase<Derived>& sub,
                                                  std::span<const int> dims,
                                                  std::span<const int> factors) {
  detail::check_factor_set(factors, dims.size());
  std::vector<int> sub_dims;
  for (int f : factors) sub_dims.push_back(dims[f]);
  const long sub_dim = total_dimension(sub_dims);
  if (sub.rows() != sub_dim || sub.cols() != sub_dim) {
    throw ShapeError("embed_on_factors: operator does not match the listed factors");
  }
  std::vector<int> order(factors.begin(), factors.end());
  std::vector<int> rest_dims;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
    if (std::find(factors.begin(), factors.end(), k) == factors.end()) {
      order.push_back(k);
      rest_dims.push_back(dims[k]);
    }
  }
  using Scalar = typename Derived::Scalar;
  const long rest_dim = total_dimension(rest_dims);
  const Matrix<Scalar> grouped =
      tensor_product(sub, Matrix<Scalar>::Identity(rest_dim, rest_dim));
  // `grouped` lives in the factor order `order`; move it back.
  std::vector<int> grouped_dims;
  for (int f : order) grouped_dims.push_back(dims[f]);
  std::vector<int> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = static_cast<int>(k);
  return permute_operator_factors(grouped, grouped_dims, inverse);
}

/// Contracts the listed factors of `v` with the bra of `bra`:
/// returns (<bra|_factors (x) I) v on the remaining factors, in order.
template <typename DerivedV, typename DerivedB>
Vector<typename DerivedV::Scalar> contract_factors(const Eigen::MatrixBase<DerivedV>& v,
                                                   std::span<const int> dims,
                                                   std::span<const int> factors,
                                                   const Eigen::MatrixBase<DerivedB>& bra) {
  if (v.size() != total_dimension(dims)) {
    throw ShapeError("contract_factors: vector does not match factor dims");
  }
  detail::check_factor_set(factors, dims.size());
  std::vector<int> rest;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
    if (std::find(factors.begin(), factors.end(), k) == factors.end()) rest.push_back(k);
  }
  const auto sub_off = detail::sub_offsets(dims, factors);
  const auto rest_off = detail::sub_offsets(dims, rest);
  if (bra.size() != static_cast<Eigen::Index>(sub_off.size())) {
    throw ShapeError("contract_factors: bra does not match the listed factors");
  }
  const auto& src = v.eval();
  const auto& b = bra.eval();
  Vector<typename DerivedV::Scalar> out(static_cast<Eigen::Index>(rest_off.size()));
  for (std::size_t r = 0; r < rest_off.size(); ++r) {
    typename DerivedV::Scalar acc(0);
    for (std::size_t s = 0; s < sub_off.size(); ++s) {
      acc += Eigen::numext::conj(b(static_cast<Eigen::Index>(s))) * src(rest_off[r] + sub_off[s]);
    }
    out(static_cast<Eigen::Index>(r)) = acc;
  }
  return out;
}

/// Rank-one projector onto the ray of `v`.
template <typename Derived>
Matrix<typename Derived::Scalar> projector(const Eigen::MatrixBase<Derived>& v,
                                           double zero_tol = kStructuralTol) {
  const double norm = v.norm();
  if (!(norm > zero_tol)) {
    throw DegenerateInputError("projector: vector has zero norm");
  }
  const Vector<typename Derived::Scalar> u = v / norm;
  return u * u.adjoint();
}

/// Largest absolute entry of a matrix expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kStructuralTol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

/// Computational basis vector |index> of dimension `dim`.
inline ComplexVector basis_vector(long dim, long index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

}  // namespace duoc

#endif  // DUOC_TENSOR_HPP
