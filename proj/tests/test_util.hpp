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

#ifndef DUOC_TESTS_TEST_UTIL_HPP
#define DUOC_TESTS_TEST_UTIL_HPP

#include <initializer_list>

#include "duoc/tensor.hpp"

namespace duoc::testing {

inline ComplexVector vec(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& x : entries) v(i++) = x;
  return v;
}

inline ComplexOperator diag(std::initializer_list<double> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double x : entries) v(i++) = x;
  return v.asDiagonal();
}

/// Basis ket |digits> over factors of dimension d, most significant first.
inline ComplexVector ket(std::initializer_list<int> digits, int d = 2) {
  long idx = 0;
  long dim = 1;
  for (int x : digits) {
    idx = idx * d + x;
    dim *= d;
  }
  return basis_vector(dim, idx);
}

template <typename A, typename B>
double diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace duoc::testing

#endif  // DUOC_TESTS_TEST_UTIL_HPP
