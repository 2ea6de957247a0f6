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

#ifndef DUOC_STATE_HPP
#define DUOC_STATE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "duoc/system.hpp"

namespace duoc {

/// Constructive description of a pure state of an (m,n)-composite:
///
///   [U_sigma (x) W_tau] ( sum_x alpha_x |x>_D (x) X^parity |x>_A (x) |tail> )
///
/// where x ranges over strings of length min(m,n), the paired factors are the
/// first min(m,n) dits and anti-dits, and the tail is a product basis string
/// on the |n-m| unpaired factors (anti-dits if m <= n, dits otherwise).
struct PureStateSpec {
  SystemSignature sig;
  FactorPermutation perm;
  std::map<std::vector<int>, Complex> coeffs;
  std::vector<int> parity;
  std::vector<int> tail;

  int paired_count() const { return std::min(sig.classical(), sig.anticlassical()); }
};

/// One term of a convex decomposition into pure states.
struct PureComponent {
  double weight;
  ComplexVector vector;  // unit norm
};

using Decomposition = std::vector<PureComponent>;

/// Positive, unit-trace operator on the space of a signature. May carry a
/// convex decomposition into pure vectors, used as a validity certificate.
class DensityState {
 public:
  /// Checks Hermiticity, trace and positivity (eigenvalues >= -tol).
  DensityState(SystemSignature sig, ComplexOperator matrix, double tol = kStructuralTol);

  /// |v><v| for a unit vector `v`; the state carries itself as certificate.
  static DensityState pure(SystemSignature sig, const ComplexVector& v);
  /// sum_j w_j |v_j><v_j|; weights must form a distribution.
  static DensityState mixture(SystemSignature sig, Decomposition components);

  /// Copy carrying `components` as its certificate. The components are not
  /// checked here; validate_mixed_state verifies them.
  DensityState with_decomposition(Decomposition components) const;

  const SystemSignature& signature() const { return sig_; }
  const ComplexOperator& matrix() const { return matrix_; }
  const std::optional<Decomposition>& decomposition() const { return decomposition_; }

 private:
  struct Unchecked {};
  DensityState(Unchecked, SystemSignature sig, ComplexOperator matrix,
               std::optional<Decomposition> decomposition);

  SystemSignature sig_;
  ComplexOperator matrix_;
  std::optional<Decomposition> decomposition_;
};

struct SeparableTerm {
  double weight;
  std::vector<int> classical_digits;
  ComplexOperator anticlassical;  // diagonal state of the anti-dits
};

/// Separable state. For the (1,1)-composite fill `gamma` (d x d weights of
/// |i><i| (x) |j><j|); otherwise list product terms.
struct SeparableSpec {
  RealMatrix gamma;
  std::vector<SeparableTerm> terms;
};

enum class Certainty {
  kExact,          // decided exactly
  kCertificate,    // a supplied or carried decomposition was verified
  kNonExhaustive,  // heuristic; a negative answer is not a proof
  kSampled,        // checked on samples only
};

const char* to_string(Certainty c);

struct ValidityReport {
  bool valid = false;
  Certainty certainty = Certainty::kExact;
  std::string witness;
  std::optional<PureStateSpec> spec;
  double residual = 0.0;
};

struct ValidationOptions {
  double tol = kStructuralTol;
  double reconstruction_tol = 1e-9;
  /// Exhaustive pure-state search bound on m and on n.
  int max_factors_per_kind = 3;
};

/// Realizes the vector of a spec in canonical factor order.
ComplexVector build_pure_state(const PureStateSpec& spec);

/// Exhaustive search over factor permutations for a pairing under which `v`
/// has definite parity on every pair and a product tail.
ValidityReport validate_pure_state(const ComplexVector& v, const SystemSignature& sig,
                                   const ValidationOptions& opts = {});

/// Checks that `v` is the state built from `spec`, up to a global phase.
ValidityReport verify_pure_certificate(const ComplexVector& v, const PureStateSpec& spec,
                                       double tol = kStructuralTol);

/// Cross-sector defect: for the (1,1)-composite the largest entry of
/// Pi_k A Pi_k' with k != k'; for single-kind composites the largest
/// off-diagonal entry. Throws DomainError for other signatures.
double sector_defect(const ComplexOperator& op, const SystemSignature& sig);

/// Whether `sector_defect` decides membership for this signature.
bool has_exact_sector_test(const SystemSignature& sig);

ValidityReport validate_mixed_state(const DensityState& rho, const ValidationOptions& opts = {});

struct CertificateTerm {
  double weight;
  PureStateSpec spec;
};

/// Certificate mode: verifies rho = sum_j q_j |Psi_j><Psi_j|.
ValidityReport validate_mixed_state(const DensityState& rho,
                                    std::span<const CertificateTerm> certificate,
                                    const ValidationOptions& opts = {});

/// Partial trace onto the listed factors.
DensityState marginal_state(const DensityState& rho, std::span<const int> keep);

/// Purification of a classical (m,0) state on the (m,n)-composite.
/// `perm.sigma` must be the identity; `phases` is indexed by the flattened
/// classical basis index (may be empty).
PureStateSpec purify_classical_state(const DensityState& rho, int anticlassical,
                                     const FactorPermutation& perm, std::span<const int> parity,
                                     std::span<const int> tail, std::span<const double> phases = {});

/// (1,1) pure state with a mixed dit marginal.
bool is_entangled(const ComplexVector& v, const SystemSignature& sig);

DensityState build_separable(const SeparableSpec& spec, const SystemSignature& sig);

struct SpanDimensions {
  int product_span_dim;
  int state_span_dim;
};

/// Real linear dimension of the span of product states and of all states.
SpanDimensions span_dimensions(const SystemSignature& sig, unsigned long long seed = 7);

/// Real coordinates of a Hermitian matrix (diagonal, Re and Im of the
/// strict upper triangle).
RealVector hermitian_coordinates(const ComplexOperator& h);

/// Number of singular values above `cutoff`.
int numerical_rank(const RealMatrix& columns, double cutoff = 1e-8);

}  // namespace duoc

#endif  // DUOC_STATE_HPP
