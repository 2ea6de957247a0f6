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

#include <algorithm>
#include <sstream>

namespace duoc {

SystemSignature::SystemSignature(int local_dim, int classical, int anticlassical)
    : d_(local_dim), m_(classical), n_(anticlassical), dimension_(1) {
  if (d_ < 2) throw DomainError("local dimension must be at least 2, got " + std::to_string(d_));
  if (m_ < 0 || n_ < 0) throw DomainError("factor counts must be non-negative");
  if (m_ + n_ < 1) throw DomainError("a composite needs at least one factor");
  for (int k = 0; k < m_ + n_; ++k) {
    dimension_ *= d_;
    if (dimension_ > kMaxDimension) {
      throw DomainError("composite dimension " + std::to_string(d_) + "^" +
                        std::to_string(m_ + n_) + " exceeds the dense cap of " +
                        std::to_string(kMaxDimension));
    }
  }
}

std::vector<FactorTag> SystemSignature::factor_order() const {
  std::vector<FactorTag> tags;
  for (int i = 0; i < m_; ++i) tags.push_back({FactorKind::kClassical, i});
  for (int i = 0; i < n_; ++i) tags.push_back({FactorKind::kAntiClassical, i});
  return tags;
}

FactorKind SystemSignature::kind(int position) const {
  if (position < 0 || position >= m_ + n_) {
    throw ShapeError("factor position " + std::to_string(position) + " out of range for " +
                     to_string());
  }
  return position < m_ ? FactorKind::kClassical : FactorKind::kAntiClassical;
}

SystemSignature SystemSignature::restrict_to(std::span<const int> positions) const {
  detail::check_factor_set(positions, static_cast<std::size_t>(m_ + n_));
  int dits = 0;
  for (int p : positions) dits += (p < m_) ? 1 : 0;
  return SystemSignature(d_, dits, static_cast<int>(positions.size()) - dits);
}

std::vector<int> SystemSignature::complement(std::span<const int> positions) const {
  detail::check_factor_set(positions, static_cast<std::size_t>(m_ + n_));
  std::vector<int> rest;
  for (int k = 0; k < m_ + n_; ++k) {
    if (std::find(positions.begin(), positions.end(), k) == positions.end()) rest.push_back(k);
  }
  return rest;
}

std::string SystemSignature::to_string() const {
  std::ostringstream os;
  os << "(" << m_ << "," << n_ << ") d=" << d_;
  return os.str();
}

ParityIndex::ParityIndex(int k, int local_dim) : k_(k), d_(local_dim) {
  if (d_ < 2) throw DomainError("local dimension must be at least 2");
  if (k_ < 0 || k_ >= d_) {
    throw DomainError("parity " + std::to_string(k_) + " out of range for d=" +
                      std::to_string(d_));
  }
}

void check_permutation(std::span<const int> p, int size, const char* what) {
  if (static_cast<int>(p.size()) != size) {
    throw DomainError(std::string(what) + " has length " + std::to_string(p.size()) +
                      ", expected " + std::to_string(size));
  }
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : p) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) {
      throw DomainError(std::string(what) + " is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

FactorPermutation FactorPermutation::identity(int classical, int anticlassical) {
  FactorPermutation p;
  p.sigma.resize(static_cast<std::size_t>(classical));
  p.tau.resize(static_cast<std::size_t>(anticlassical));
  std::iota(p.sigma.begin(), p.sigma.end(), 0);
  std::iota(p.tau.begin(), p.tau.end(), 0);
  return p;
}

bool FactorPermutation::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] != static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

std::vector<int> chain(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

}  // namespace

FactorPermutation FactorPermutation::inverse() const { return {invert(sigma), invert(tau)}; }

FactorPermutation compose(const FactorPermutation& outer, const FactorPermutation& inner) {
  if (outer.sigma.size() != inner.sigma.size() || outer.tau.size() != inner.tau.size()) {
    throw DomainError("compose: permutations act on different factor counts");
  }
  return {chain(outer.sigma, inner.sigma), chain(outer.tau, inner.tau)};
}

ComplexOperator parity_projector(int local_dim, ParityIndex k) {
  if (k.local_dim() != local_dim) {
    throw DomainError("parity index was built for a different local dimension");
  }
  const long dim = static_cast<long>(local_dim) * local_dim;
  ComplexOperator proj = ComplexOperator::Zero(dim, dim);
  for (int i = 0; i < local_dim; ++i) {
    const long idx = static_cast<long>(i) * local_dim + oplus(i, k.value(), local_dim);
    proj(idx, idx) = 1.0;
  }
  return proj;
}

std::vector<int> permuted_positions(const SystemSignature& sig, const FactorPermutation& perm) {
  check_permutation(perm.sigma, sig.classical(), "sigma");
  check_permutation(perm.tau, sig.anticlassical(), "tau");
  std::vector<int> dest;
  for (int s : perm.sigma) dest.push_back(sig.classical_position(s));
  for (int t : perm.tau) dest.push_back(sig.anticlassical_position(t));
  return dest;
}

ComplexOperator embed_permutation(const SystemSignature& sig, const FactorPermutation& perm) {
  const auto dest = permuted_positions(sig, perm);
  // permute_factors wants, for each destination slot, its source factor.
  std::vector<int> order(dest.size());
  for (std::size_t i = 0; i < dest.size(); ++i) order[static_cast<std::size_t>(dest[i])] = static_cast<int>(i);
  const auto dims = sig.dims();
  const auto map = factor_permutation_map(dims, order);
  const long dim = sig.dimension();
  ComplexOperator u = ComplexOperator::Zero(dim, dim);
  for (long c = 0; c < dim; ++c) u(map[static_cast<std::size_t>(c)], c) = 1.0;
  return u;
}

ParityIndex sector_of_basis_pair(int local_dim, int i, int j) {
  if (i < 0 || i >= local_dim || j < 0 || j >= local_dim) {
    throw DomainError("basis labels out of range");
  }
  return ParityIndex(oplus(j, -i, local_dim), local_dim);
}

}  // namespace duoc
