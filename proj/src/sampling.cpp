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

#include "duoc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace duoc {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.below(i + 1))]);
  }
  return p;
}

PureStateSpec random_pure_spec(const SystemSignature& sig, Rng& rng) {
  const int d = sig.local_dim();
  const int paired = std::min(sig.classical(), sig.anticlassical());
  const int unpaired = std::abs(sig.classical() - sig.anticlassical());
  PureStateSpec spec{sig, {random_permutation(sig.classical(), rng),
                           random_permutation(sig.anticlassical(), rng)},
                     {}, {}, {}};
  for (int i = 0; i < paired; ++i) spec.parity.push_back(rng.below(d));
  for (int i = 0; i < unpaired; ++i) spec.tail.push_back(rng.below(d));

  const std::vector<int> dims(static_cast<std::size_t>(paired), d);
  const long count = total_dimension(dims);
  double norm2 = 0.0;
  for (long x = 0; x < count; ++x) {
    const Complex a = rng.complex_normal();
    norm2 += std::norm(a);
    spec.coeffs[index_to_digits(x, dims)] = a;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& [key, a] : spec.coeffs) a *= scale;
  return spec;
}

DensityState random_mixed_state(const SystemSignature& sig, int terms, Rng& rng) {
  Decomposition comps;
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double w = rng.uniform(0.05, 1.0);
    total += w;
    comps.push_back({w, build_pure_state(random_pure_spec(sig, rng))});
  }
  for (auto& c : comps) c.weight /= total;
  return DensityState::mixture(sig, std::move(comps));
}

ComplexVector random_unit_vector(long dim, Rng& rng) {
  ComplexVector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

}  // namespace duoc
