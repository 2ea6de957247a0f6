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

#include "duoc/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "duoc/sampling.hpp"

namespace duoc {

namespace {

constexpr double kNormTol = 1e-10;

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

void check_digits(std::span<const int> digits, int d, const char* what) {
  for (int x : digits) {
    if (x < 0 || x >= d) {
      throw DomainError(std::string(what) + " digit " + std::to_string(x) + " out of range for d=" +
                        std::to_string(d));
    }
  }
}

// Unpermuted layout: paired dits 0..k-1 then (if m > n) tail dits; paired
// anti-dits m..m+k-1 then (if m <= n) tail anti-dits.
int tail_start(const SystemSignature& sig) {
  const int k = std::min(sig.classical(), sig.anticlassical());
  return sig.classical() <= sig.anticlassical() ? sig.classical() + k : k;
}

}  // namespace

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::kExact:
      return "EXACT";
    case Certainty::kCertificate:
      return "CERTIFICATE";
    case Certainty::kNonExhaustive:
      return "NON-EXHAUSTIVE";
    case Certainty::kSampled:
      return "SAMPLED";
  }
  return "?";
}

// ---------------------------------------------------------------- DensityState

DensityState::DensityState(SystemSignature sig, ComplexOperator matrix, double tol)
    : sig_(std::move(sig)), matrix_(std::move(matrix)) {
  const long dim = sig_.dimension();
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DensityMatrixError("density matrix has dimension " + std::to_string(matrix_.rows()) +
                             ", signature " + sig_.to_string() + " needs " + std::to_string(dim));
  }
  if (!is_hermitian(matrix_, tol)) throw DensityMatrixError("density matrix is not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw DensityMatrixError("density matrix trace is " + std::to_string(tr.real()) + ", not 1");
  }
  const ComplexOperator herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(herm, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol) {
    throw DensityMatrixError("density matrix has negative eigenvalue " +
                             std::to_string(eig.eigenvalues().minCoeff()));
  }
}

DensityState::DensityState(Unchecked, SystemSignature sig, ComplexOperator matrix,
                           std::optional<Decomposition> decomposition)
    : sig_(std::move(sig)), matrix_(std::move(matrix)), decomposition_(std::move(decomposition)) {}

DensityState DensityState::pure(SystemSignature sig, const ComplexVector& v) {
  return mixture(std::move(sig), {{1.0, v}});
}

DensityState DensityState::mixture(SystemSignature sig, Decomposition components) {
  const long dim = sig.dimension();
  double total = 0.0;
  ComplexOperator m = ComplexOperator::Zero(dim, dim);
  for (const auto& c : components) {
    if (c.vector.size() != dim) {
      throw ShapeError("mixture component has dimension " + std::to_string(c.vector.size()) +
                       ", expected " + std::to_string(dim));
    }
    if (std::abs(c.vector.norm() - 1.0) > kNormTol) {
      throw NormalizationError("mixture component is not a unit vector");
    }
    if (c.weight < -kNormTol) throw DensityMatrixError("mixture weight is negative");
    total += c.weight;
    m.noalias() += c.weight * (c.vector * c.vector.adjoint());
  }
  if (components.empty() || std::abs(total - 1.0) > kNormTol) {
    throw DensityMatrixError("mixture weights do not sum to 1");
  }
  return DensityState(Unchecked{}, std::move(sig), std::move(m), std::move(components));
}

DensityState DensityState::with_decomposition(Decomposition components) const {
  return DensityState(Unchecked{}, sig_, matrix_, std::move(components));
}

// ---------------------------------------------------------------- pure states

ComplexVector build_pure_state(const PureStateSpec& spec) {
  const auto& sig = spec.sig;
  const int d = sig.local_dim();
  const int m = sig.classical();
  const int k = spec.paired_count();
  const int unpaired = std::abs(sig.classical() - sig.anticlassical());
  const auto dest = permuted_positions(sig, spec.perm);
  if (static_cast<int>(spec.parity.size()) != k) {
    throw DomainError("parity vector has length " + std::to_string(spec.parity.size()) +
                      ", expected " + std::to_string(k));
  }
  if (static_cast<int>(spec.tail.size()) != unpaired) {
    throw DomainError("tail has length " + std::to_string(spec.tail.size()) + ", expected " +
                      std::to_string(unpaired));
  }
  check_digits(spec.parity, d, "parity");
  check_digits(spec.tail, d, "tail");
  if (spec.coeffs.empty()) throw NormalizationError("pure state spec has no coefficients");
  double norm2 = 0.0;
  for (const auto& [x, a] : spec.coeffs) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw NormalizationError("coefficients have squared norm " + std::to_string(norm2));
  }

  const auto strides = factor_strides(sig.dims());
  const int t0 = tail_start(sig);
  std::vector<int> u(static_cast<std::size_t>(sig.factor_count()));
  ComplexVector v = ComplexVector::Zero(sig.dimension());
  for (const auto& [x, a] : spec.coeffs) {
    if (static_cast<int>(x.size()) != k) {
      throw DomainError("coefficient key " + join(x) + " has wrong length");
    }
    check_digits(x, d, "coefficient key");
    for (int i = 0; i < k; ++i) {
      u[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
      u[static_cast<std::size_t>(m + i)] =
          oplus(x[static_cast<std::size_t>(i)], spec.parity[static_cast<std::size_t>(i)], d);
    }
    for (int t = 0; t < unpaired; ++t) {
      u[static_cast<std::size_t>(t0 + t)] = spec.tail[static_cast<std::size_t>(t)];
    }
    long idx = 0;
    for (std::size_t f = 0; f < u.size(); ++f) idx += u[f] * strides[static_cast<std::size_t>(dest[f])];
    v(idx) += a;
  }
  return v;
}

namespace {

struct Pattern {
  std::vector<int> parity;
  std::vector<int> tail;
};

Pattern pattern_of(const std::vector<int>& u, const SystemSignature& sig) {
  const int d = sig.local_dim();
  const int m = sig.classical();
  const int k = std::min(m, sig.anticlassical());
  const int unpaired = std::abs(m - sig.anticlassical());
  const int t0 = tail_start(sig);
  Pattern p;
  for (int i = 0; i < k; ++i) {
    p.parity.push_back(oplus(u[static_cast<std::size_t>(m + i)], -u[static_cast<std::size_t>(i)], d));
  }
  for (int t = 0; t < unpaired; ++t) p.tail.push_back(u[static_cast<std::size_t>(t0 + t)]);
  return p;
}

bool matches(const std::vector<int>& u, const SystemSignature& sig, const Pattern& p) {
  const int d = sig.local_dim();
  const int m = sig.classical();
  const int t0 = tail_start(sig);
  for (std::size_t i = 0; i < p.parity.size(); ++i) {
    if (oplus(u[m + i], -u[i], d) != p.parity[i]) return false;
  }
  for (std::size_t t = 0; t < p.tail.size(); ++t) {
    if (u[static_cast<std::size_t>(t0) + t] != p.tail[t]) return false;
  }
  return true;
}

std::string describe(const FactorPermutation& perm, const Pattern& p) {
  return "sigma=" + join(perm.sigma) + " tau=" + join(perm.tau) + " parity=" + join(p.parity) +
         " tail=" + join(p.tail);
}

}  // namespace

ValidityReport validate_pure_state(const ComplexVector& v, const SystemSignature& sig,
                                   const ValidationOptions& opts) {
  if (v.size() != sig.dimension()) {
    throw ShapeError("vector dimension " + std::to_string(v.size()) + " does not match " +
                     sig.to_string());
  }
  if (std::abs(v.norm() - 1.0) > kNormTol) {
    throw NormalizationError("validate_pure_state expects a unit vector, norm is " +
                             std::to_string(v.norm()));
  }
  ValidityReport report;
  if (sig.classical() > opts.max_factors_per_kind ||
      sig.anticlassical() > opts.max_factors_per_kind) {
    report.certainty = Certainty::kNonExhaustive;
    report.witness = "signature " + sig.to_string() +
                     " exceeds the exhaustive search bound; supply a certificate";
    report.residual = 1.0;
    return report;
  }

  const auto dims = sig.dims();
  const long dim = sig.dimension();
  Eigen::Index peak = 0;
  v.cwiseAbs2().maxCoeff(&peak);

  std::vector<std::vector<int>> digits(static_cast<std::size_t>(dim));
  for (long c = 0; c < dim; ++c) digits[static_cast<std::size_t>(c)] = index_to_digits(c, dims);

  auto perm = FactorPermutation::identity(sig.classical(), sig.anticlassical());
  double best = 2.0;
  std::vector<int> u(dims.size());
  do {
    perm.tau = FactorPermutation::identity(0, sig.anticlassical()).tau;
    do {
      const auto dest = permuted_positions(sig, perm);
      auto unpermute = [&](long c) {
        const auto& cd = digits[static_cast<std::size_t>(c)];
        for (std::size_t f = 0; f < u.size(); ++f) u[f] = cd[static_cast<std::size_t>(dest[f])];
      };
      unpermute(peak);
      const Pattern pattern = pattern_of(u, sig);
      double leaked = 0.0;
      for (long c = 0; c < dim; ++c) {
        unpermute(c);
        if (!matches(u, sig, pattern)) leaked += std::norm(v(c));
      }
      const double residual = std::sqrt(leaked);
      if (residual < best) {
        best = residual;
        report.residual = residual;
        report.witness = describe(perm, pattern);
        if (residual <= opts.tol) {
          PureStateSpec spec{sig, perm, {}, pattern.parity, pattern.tail};
          const int k = spec.paired_count();
          double norm2 = 0.0;
          for (long c = 0; c < dim; ++c) {
            unpermute(c);
            if (matches(u, sig, pattern) && v(c) != Complex(0.0)) {
              spec.coeffs[std::vector<int>(u.begin(), u.begin() + k)] = v(c);
              norm2 += std::norm(v(c));
            }
          }
          for (auto& [x, a] : spec.coeffs) a /= std::sqrt(norm2);
          report.valid = true;
          report.spec = std::move(spec);
          return report;
        }
      }
    } while (std::next_permutation(perm.tau.begin(), perm.tau.end()));
  } while (std::next_permutation(perm.sigma.begin(), perm.sigma.end()));
  return report;
}

ValidityReport verify_pure_certificate(const ComplexVector& v, const PureStateSpec& spec,
                                       double tol) {
  ValidityReport report;
  report.certainty = Certainty::kCertificate;
  const ComplexVector w = build_pure_state(spec);
  if (w.size() != v.size()) throw ShapeError("certificate signature does not match vector");
  const Complex overlap = w.dot(v);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  report.residual = (v - phase * w).norm();
  report.valid = report.residual <= tol;
  report.witness = "certificate";
  report.spec = spec;
  return report;
}

// ---------------------------------------------------------------- mixed states

bool has_exact_sector_test(const SystemSignature& sig) {
  return sig.classical() == 0 || sig.anticlassical() == 0 ||
         (sig.classical() == 1 && sig.anticlassical() == 1);
}

double sector_defect(const ComplexOperator& op, const SystemSignature& sig) {
  if (!has_exact_sector_test(sig)) {
    throw DomainError("no exact sector test for " + sig.to_string());
  }
  const long dim = sig.dimension();
  const int d = sig.local_dim();
  const bool pair = sig.classical() == 1 && sig.anticlassical() == 1;
  auto label = [&](long idx) -> long {
    if (!pair) return idx;
    return oplus(static_cast<int>(idx % d), -static_cast<int>(idx / d), d);
  };
  double defect = 0.0;
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      if (label(r) != label(c)) defect = std::max(defect, std::abs(op(r, c)));
    }
  }
  return defect;
}

namespace {

ValidityReport verify_decomposition(const DensityState& rho, const Decomposition& comps,
                                    const ValidationOptions& opts) {
  ValidityReport report;
  report.certainty = Certainty::kCertificate;
  const long dim = rho.signature().dimension();
  ComplexOperator rebuilt = ComplexOperator::Zero(dim, dim);
  double total = 0.0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& c = comps[j];
    if (c.weight < -opts.tol) {
      report.witness = "negative weight in decomposition";
      report.residual = -c.weight;
      return report;
    }
    const auto pure = validate_pure_state(c.vector, rho.signature(), opts);
    if (!pure.valid) {
      report.certainty = pure.certainty == Certainty::kNonExhaustive ? Certainty::kNonExhaustive
                                                                      : Certainty::kCertificate;
      report.witness = "component " + std::to_string(j) + " is not a valid pure state (" +
                       pure.witness + ")";
      report.residual = pure.residual;
      return report;
    }
    total += c.weight;
    rebuilt.noalias() += c.weight * (c.vector * c.vector.adjoint());
  }
  report.residual = std::max(max_abs(rebuilt - rho.matrix()), std::abs(total - 1.0));
  report.valid = report.residual <= opts.reconstruction_tol;
  report.witness = report.valid ? "decomposition into " + std::to_string(comps.size()) +
                                      " valid pure states"
                                : "decomposition does not reproduce the matrix";
  return report;
}

}  // namespace

ValidityReport validate_mixed_state(const DensityState& rho, const ValidationOptions& opts) {
  const auto& sig = rho.signature();
  if (has_exact_sector_test(sig)) {
    ValidityReport report;
    report.certainty = Certainty::kExact;
    report.residual = sector_defect(rho.matrix(), sig);
    report.valid = report.residual <= opts.tol;
    report.witness = report.valid ? "sector block-diagonal" : "nonzero cross-sector coherence";
    return report;
  }
  if (rho.decomposition()) {
    auto report = verify_decomposition(rho, *rho.decomposition(), opts);
    if (report.valid) return report;
  }
  // Eigendecomposition heuristic: sound when it succeeds.
  const ComplexOperator herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(herm);
  Decomposition comps;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lambda = eig.eigenvalues()(i);
    if (lambda > opts.tol) comps.push_back({lambda, eig.eigenvectors().col(i).normalized()});
  }
  auto report = verify_decomposition(rho, comps, opts);
  if (!report.valid) report.certainty = Certainty::kNonExhaustive;
  else report.witness = "eigendecomposition into valid pure states";
  return report;
}

ValidityReport validate_mixed_state(const DensityState& rho,
                                    std::span<const CertificateTerm> certificate,
                                    const ValidationOptions& opts) {
  Decomposition comps;
  for (const auto& term : certificate) {
    if (!(term.spec.sig == rho.signature())) {
      throw ShapeError("certificate term signature does not match the state");
    }
    comps.push_back({term.weight, build_pure_state(term.spec)});
  }
  return verify_decomposition(rho, comps, opts);
}

DensityState marginal_state(const DensityState& rho, std::span<const int> keep) {
  if (keep.empty()) throw DomainError("marginal_state: keep set is empty");
  const auto& sig = rho.signature();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  const auto dims = sig.dims();
  SystemSignature sub = sig.restrict_to(kept);
  ComplexOperator reduced = partial_trace(rho.matrix(), dims, kept);
  const auto traced = sig.complement(kept);
  if (traced.empty()) return rho;

  std::optional<Decomposition> comps;
  if (rho.decomposition()) {
    std::vector<int> traced_dims(traced.size(), sig.local_dim());
    const long branches = total_dimension(traced_dims);
    if (static_cast<long>(rho.decomposition()->size()) * branches <= kMaxDimension) {
      comps.emplace();
      for (const auto& c : *rho.decomposition()) {
        for (long b = 0; b < branches; ++b) {
          const ComplexVector branch =
              contract_factors(c.vector, dims, traced, basis_vector(branches, b));
          const double w = c.weight * branch.squaredNorm();
          if (w > 1e-14) comps->push_back({w, branch.normalized()});
        }
      }
    }
  }
  DensityState out(sub, std::move(reduced));
  if (comps) {
    double total = 0.0;
    for (const auto& c : *comps) total += c.weight;
    for (auto& c : *comps) c.weight /= total;
    return out.with_decomposition(std::move(*comps));
  }
  return out;
}

// ---------------------------------------------------------------- purification

PureStateSpec purify_classical_state(const DensityState& rho, int anticlassical,
                                     const FactorPermutation& perm, std::span<const int> parity,
                                     std::span<const int> tail, std::span<const double> phases) {
  const auto& sig = rho.signature();
  if (sig.anticlassical() != 0) {
    throw DomainError("purify_classical_state expects a classical (m,0) state, got " +
                      sig.to_string());
  }
  const int m = sig.classical();
  const int d = sig.local_dim();
  if (anticlassical < m) {
    throw DomainError("purification needs n >= m anti-dits (n=" + std::to_string(anticlassical) +
                      ", m=" + std::to_string(m) + ")");
  }
  const ComplexOperator& mat = rho.matrix();
  double off = 0.0;
  for (long r = 0; r < mat.rows(); ++r) {
    for (long c = 0; c < mat.cols(); ++c) {
      if (r != c) off = std::max(off, std::abs(mat(r, c)));
    }
  }
  if (off > kStructuralTol) throw NotClassicalError("state is not diagonal in the computational basis");
  check_permutation(perm.sigma, m, "sigma");
  check_permutation(perm.tau, anticlassical, "tau");
  for (std::size_t i = 0; i < perm.sigma.size(); ++i) {
    if (perm.sigma[i] != static_cast<int>(i)) {
      throw DomainError("purification keeps the dits in place; sigma must be the identity");
    }
  }
  if (!phases.empty() && static_cast<long>(phases.size()) != sig.dimension()) {
    throw DomainError("phases must be indexed by the classical basis");
  }

  PureStateSpec spec{SystemSignature(d, m, anticlassical), perm, {},
                     std::vector<int>(parity.begin(), parity.end()),
                     std::vector<int>(tail.begin(), tail.end())};
  const auto dims = sig.dims();
  for (long x = 0; x < sig.dimension(); ++x) {
    const double p = mat(x, x).real();
    if (p <= 0.0) continue;
    const double theta = phases.empty() ? 0.0 : phases[static_cast<std::size_t>(x)];
    spec.coeffs[index_to_digits(x, dims)] = std::polar(std::sqrt(p), theta);
  }
  // Surfaces length and range errors now rather than at first use.
  (void)build_pure_state(spec);
  return spec;
}

// ---------------------------------------------------------------- entanglement

bool is_entangled(const ComplexVector& v, const SystemSignature& sig) {
  if (sig.classical() != 1 || sig.anticlassical() != 1) {
    throw DomainError("is_entangled is defined on the (1,1)-composite");
  }
  const auto report = validate_pure_state(v, sig);
  if (!report.valid) throw ValidityError("not a valid pure state: " + report.witness);
  const std::vector<int> keep{0};
  const ComplexOperator marginal = partial_trace(v * v.adjoint(), sig.dims(), keep);
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(marginal, Eigen::EigenvaluesOnly);
  return (eig.eigenvalues().array() > 1e-10).count() >= 2;
}

DensityState build_separable(const SeparableSpec& spec, const SystemSignature& sig) {
  const int d = sig.local_dim();
  Decomposition comps;
  if (spec.gamma.size() > 0) {
    if (sig.classical() != 1 || sig.anticlassical() != 1) {
      throw DomainError("gamma form is for the (1,1)-composite");
    }
    if (spec.gamma.rows() != d || spec.gamma.cols() != d) {
      throw DomainError("gamma must be d x d");
    }
    if (spec.gamma.minCoeff() < 0.0 || std::abs(spec.gamma.sum() - 1.0) > kNormTol) {
      throw DomainError("gamma weights are not a probability distribution");
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (spec.gamma(i, j) > 0.0) {
          comps.push_back({spec.gamma(i, j), basis_vector(sig.dimension(), i * d + j)});
        }
      }
    }
    return DensityState::mixture(sig, std::move(comps));
  }

  const int m = sig.classical();
  const int n = sig.anticlassical();
  double total = 0.0;
  const std::vector<int> anti_dims(static_cast<std::size_t>(n), d);
  const std::vector<int> cl_dims(static_cast<std::size_t>(m), d);
  const long anti_dim = total_dimension(anti_dims);
  for (const auto& term : spec.terms) {
    if (term.weight < 0.0) throw DomainError("separable weight is negative");
    total += term.weight;
    if (static_cast<int>(term.classical_digits.size()) != m) {
      throw DomainError("classical product string has wrong length");
    }
    check_digits(term.classical_digits, d, "classical");
    if (term.anticlassical.rows() != anti_dim || term.anticlassical.cols() != anti_dim) {
      throw DomainError("anti-classical factor has wrong dimension");
    }
    const long c = digits_to_index(term.classical_digits, cl_dims);
    for (long a = 0; a < anti_dim; ++a) {
      for (long b = 0; b < anti_dim; ++b) {
        if (a != b && std::abs(term.anticlassical(a, b)) > kStructuralTol) {
          throw NotClassicalError("anti-classical factor is not diagonal");
        }
      }
      const double w = term.anticlassical(a, a).real();
      if (w < -kStructuralTol) throw DomainError("anti-classical factor is not positive");
      if (w > 0.0) comps.push_back({term.weight * w, basis_vector(sig.dimension(), c * anti_dim + a)});
    }
  }
  if (spec.terms.empty() || std::abs(total - 1.0) > kNormTol) {
    throw DomainError("separable weights are not a probability distribution");
  }
  return DensityState::mixture(sig, std::move(comps));
}

// ---------------------------------------------------------------- span dimensions

RealVector hermitian_coordinates(const ComplexOperator& h) {
  const long n = h.rows();
  RealVector out(n * n);
  long k = 0;
  for (long i = 0; i < n; ++i) out(k++) = h(i, i).real();
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      out(k++) = h(i, j).real();
      out(k++) = h(i, j).imag();
    }
  }
  return out;
}

int numerical_rank(const RealMatrix& columns, double cutoff) {
  if (columns.size() == 0) return 0;
  Eigen::BDCSVD<RealMatrix> svd(columns);
  return static_cast<int>((svd.singularValues().array() > cutoff).count());
}

SpanDimensions span_dimensions(const SystemSignature& sig, unsigned long long seed) {
  const long dim = sig.dimension();
  if (dim > 64) throw DomainError("span_dimensions supports total dimension up to 64");
  // Products of valid states of the elementary factors are mixtures of
  // computational basis products, so basis projectors span them.
  RealMatrix products(dim * dim, dim);
  for (long i = 0; i < dim; ++i) {
    products.col(i) = hermitian_coordinates(projector(basis_vector(dim, i)));
  }
  Rng rng(seed);
  const long samples = std::max<long>(200, 2 * dim * dim);
  RealMatrix states(dim * dim, samples);
  for (long s = 0; s < samples; ++s) {
    states.col(s) = hermitian_coordinates(projector(build_pure_state(random_pure_spec(sig, rng))));
  }
  return {numerical_rank(products), numerical_rank(states)};
}

}  // namespace duoc
