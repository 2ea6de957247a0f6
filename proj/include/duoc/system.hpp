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

#ifndef DUOC_SYSTEM_HPP
#define DUOC_SYSTEM_HPP

#include <span>
#include <string>
#include <vector>

#include "duoc/tensor.hpp"

namespace duoc {

enum class FactorKind { kClassical, kAntiClassical };

/// Position tag of one tensor factor: its kind and its index among the
/// factors of that kind.
struct FactorTag {
  FactorKind kind;
  int index;

  bool operator==(const FactorTag&) const = default;
};

/// An (m,n)-composite of m dits and n anti-dits, all of local dimension d.
/// Factors are laid out canonically: D_1..D_m then A_1..A_n.
class SystemSignature {
 public:
  SystemSignature(int local_dim, int classical, int anticlassical);

  int local_dim() const { return d_; }
  int classical() const { return m_; }
  int anticlassical() const { return n_; }
  int factor_count() const { return m_ + n_; }
  long dimension() const { return dimension_; }

  /// Per-factor dimensions in canonical order (all equal to d).
  std::vector<int> dims() const { return std::vector<int>(static_cast<std::size_t>(m_ + n_), d_); }
  std::vector<FactorTag> factor_order() const;
  FactorKind kind(int position) const;
  int classical_position(int i) const { return i; }
  int anticlassical_position(int i) const { return m_ + i; }

  /// Signature of the listed factors, kept in canonical order.
  SystemSignature restrict_to(std::span<const int> positions) const;
  /// Positions not listed, ascending.
  std::vector<int> complement(std::span<const int> positions) const;

  std::string to_string() const;

  bool operator==(const SystemSignature&) const = default;

 private:
  int d_;
  int m_;
  int n_;
  long dimension_;
};

/// Parity label k of the sector Span{|i>|i+k mod d>} of a dit/anti-dit pair.
class ParityIndex {
 public:
  ParityIndex(int k, int local_dim);

  int value() const { return k_; }
  int local_dim() const { return d_; }

  bool operator==(const ParityIndex&) const = default;

 private:
  int k_;
  int d_;
};

/// Independent permutations of the classical factors (sigma) and of the
/// anti-classical factors (tau). Factor i of a kind moves to position
/// sigma[i] (resp. tau[i]) among the factors of that kind.
struct FactorPermutation {
  std::vector<int> sigma;
  std::vector<int> tau;

  static FactorPermutation identity(int classical, int anticlassical);
  bool is_identity() const;
  FactorPermutation inverse() const;

  bool operator==(const FactorPermutation&) const = default;
};

/// `outer` applied after `inner`.
FactorPermutation compose(const FactorPermutation& outer, const FactorPermutation& inner);

/// Addition modulo d.
inline int oplus(int a, int b, int d) { return ((a + b) % d + d) % d; }

/// Projector on the parity-k sector of a dit/anti-dit pair (dit first).
ComplexOperator parity_projector(int local_dim, ParityIndex k);

/// Permutation unitary for `perm` acting on the full space of `sig`.
ComplexOperator embed_permutation(const SystemSignature& sig, const FactorPermutation& perm);

/// Canonical positions after permuting: element i is where factor i lands.
std::vector<int> permuted_positions(const SystemSignature& sig, const FactorPermutation& perm);

/// The sector k with j = i + k mod d.
ParityIndex sector_of_basis_pair(int local_dim, int i, int j);

void check_permutation(std::span<const int> p, int size, const char* what);

}  // namespace duoc

#endif  // DUOC_SYSTEM_HPP
