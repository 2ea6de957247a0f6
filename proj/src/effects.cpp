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

namespace duoc {

Effect Effect::from_terms(const SystemSignature& sig, std::vector<EffectTerm> terms) {
  const long dim = sig.dimension();
  ComplexOperator op = ComplexOperator::Zero(dim, dim);
  for (const auto& t : terms) {
    if (!(t.spec.sig == sig)) throw ShapeError("effect term signature does not match the effect");
    if (t.weight < 0.0) throw DomainError("effect term weight is negative");
    op.noalias() += t.weight * projector(build_pure_state(t.spec));
  }
  return {sig, std::move(op), std::move(terms)};
}

Effect Effect::identity(const SystemSignature& sig) {
  // Every computational basis product is a valid pure state, and they sum to I.
  std::vector<EffectTerm> terms;
  const auto dims = sig.dims();
  const int d = sig.local_dim();
  const int k = std::min(sig.classical(), sig.anticlassical());
  const int m = sig.classical();
  const bool anti_tail = sig.classical() <= sig.anticlassical();
  for (long idx = 0; idx < sig.dimension(); ++idx) {
    const auto digits = index_to_digits(idx, dims);
    PureStateSpec spec{sig, FactorPermutation::identity(m, sig.anticlassical()), {}, {}, {}};
    std::vector<int> key(digits.begin(), digits.begin() + k);
    for (int i = 0; i < k; ++i) {
      spec.parity.push_back(oplus(digits[static_cast<std::size_t>(m + i)],
                                  -digits[static_cast<std::size_t>(i)], d));
    }
    const int t0 = anti_tail ? m + k : k;
    const int unpaired = std::abs(m - sig.anticlassical());
    for (int t = 0; t < unpaired; ++t) spec.tail.push_back(digits[static_cast<std::size_t>(t0 + t)]);
    spec.coeffs[key] = 1.0;
    terms.push_back({1.0, std::move(spec)});
  }
  const long dim = sig.dimension();
  return {sig, ComplexOperator::Identity(dim, dim), std::move(terms)};
}

Povm::Povm(std::vector<Effect> effects, double tol) : effects_(std::move(effects)) {
  if (effects_.empty()) throw DomainError("a POVM needs at least one effect");
  const auto& sig = effects_.front().sig;
  const long dim = sig.dimension();
  ComplexOperator sum = ComplexOperator::Zero(dim, dim);
  for (const auto& e : effects_) {
    if (!(e.sig == sig)) throw DomainError("POVM effects act on different signatures");
    if (e.op.rows() != dim || e.op.cols() != dim) throw ShapeError("effect has wrong dimension");
    sum += e.op;
  }
  const double defect = max_abs(sum - ComplexOperator::Identity(dim, dim));
  if (defect > tol) {
    throw DomainError("POVM effects do not sum to the identity (defect " + std::to_string(defect) +
                      ")");
  }
}

ValidityReport validate_effect(const Effect& e, const ValidationOptions& opts) {
  const long dim = e.sig.dimension();
  if (e.op.rows() != dim || e.op.cols() != dim) throw ShapeError("effect has wrong dimension");
  if (!is_hermitian(e.op, opts.tol)) throw DomainError("effect operator is not Hermitian");

  ValidityReport report;
  const ComplexOperator herm = 0.5 * (e.op + e.op.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(herm);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo < -opts.tol || hi > 1.0 + opts.tol) {
    report.witness = "eigenvalues outside [0,1]";
    report.residual = std::max(-lo, hi - 1.0);
    return report;
  }
  if (has_exact_sector_test(e.sig)) {
    report.certainty = Certainty::kExact;
    report.residual = sector_defect(e.op, e.sig);
    report.valid = report.residual <= opts.tol;
    report.witness = report.valid ? "sector block-diagonal" : "nonzero cross-sector coherence";
    return report;
  }
  if (e.certificate) {
    report.certainty = Certainty::kCertificate;
    ComplexOperator rebuilt = ComplexOperator::Zero(dim, dim);
    for (const auto& t : *e.certificate) {
      if (t.weight < 0.0) {
        report.witness = "negative certificate weight";
        report.residual = -t.weight;
        return report;
      }
      rebuilt.noalias() += t.weight * projector(build_pure_state(t.spec));
    }
    report.residual = max_abs(rebuilt - e.op);
    report.valid = report.residual <= opts.tol;
    report.witness = report.valid ? "certificate with " + std::to_string(e.certificate->size()) +
                                        " pure terms"
                                  : "certificate does not reproduce the operator";
    if (report.valid) return report;
  }
  report.certainty = Certainty::kNonExhaustive;
  report.residual = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) <= opts.tol) continue;
    const ComplexVector u = eig.eigenvectors().col(i).normalized();
    const auto pure = validate_pure_state(u, e.sig, opts);
    if (!pure.valid) {
      report.valid = false;
      report.witness = "eigenvector " + std::to_string(i) + " is not a valid pure state";
      report.residual = pure.residual;
      return report;
    }
  }
  report.valid = true;
  report.certainty = Certainty::kCertificate;
  report.witness = "eigendecomposition into valid pure states";
  return report;
}

ValidityReport validate_povm(const Povm& povm, const ValidationOptions& opts) {
  ValidityReport worst;
  worst.valid = true;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    auto r = validate_effect(povm[i], opts);
    if (!r.valid) {
      r.witness = "effect " + std::to_string(i) + ": " + r.witness;
      return r;
    }
    if (r.certainty == Certainty::kCertificate) worst.certainty = Certainty::kCertificate;
    worst.residual = std::max(worst.residual, r.residual);
  }
  worst.witness = "all " + std::to_string(povm.size()) + " effects valid";
  return worst;
}

double trace_of_product(const ComplexOperator& a, const ComplexOperator& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

std::vector<double> born_probabilities(const Povm& povm, const DensityState& rho) {
  if (!(povm.signature() == rho.signature())) {
    throw DomainError("POVM acts on " + povm.signature().to_string() + " but the state lives on " +
                      rho.signature().to_string());
  }
  std::vector<double> probs;
  for (const auto& e : povm.effects()) probs.push_back(trace_of_product(e.op, rho.matrix()));
  return probs;
}

ConditionalResult conditional_state(const DensityState& rho, const Effect& e,
                                    std::span<const int> subset) {
  const auto& sig = rho.signature();
  if (subset.empty()) throw DomainError("conditional_state: empty factor subset");
  std::vector<int> sub(subset.begin(), subset.end());
  std::sort(sub.begin(), sub.end());
  for (int f : sub) {
    if (f < 0 || f >= sig.factor_count()) {
      throw DomainError("factor " + std::to_string(f) + " is not a factor of " + sig.to_string());
    }
  }
  if (std::adjacent_find(sub.begin(), sub.end()) != sub.end()) {
    throw DomainError("conditional_state: repeated factor in subset");
  }
  const auto rest = sig.complement(sub);
  if (rest.empty()) throw DomainError("conditional_state: subset covers every factor");
  if (!(sig.restrict_to(sub) == e.sig)) {
    throw DomainError("effect acts on " + e.sig.to_string() + " but the subset is " +
                      sig.restrict_to(sub).to_string());
  }

  const auto dims = sig.dims();
  const ComplexOperator applied = embed_on_factors(e.op, dims, sub) * rho.matrix();
  const double prob = applied.trace().real();
  if (prob <= kConditionalFloor) return {std::max(prob, 0.0), std::nullopt};

  ComplexOperator post = partial_trace(applied, dims, rest) / prob;
  post = 0.5 * (post + post.adjoint()).eval();
  const auto post_sig = sig.restrict_to(rest);
  DensityState state(post_sig, std::move(post));

  if (rho.decomposition() && e.certificate) {
    Decomposition comps;
    double total = 0.0;
    for (const auto& c : *rho.decomposition()) {
      for (const auto& t : *e.certificate) {
        const ComplexVector bra = build_pure_state(t.spec);
        const ComplexVector branch = contract_factors(c.vector, dims, sub, bra);
        const double w = c.weight * t.weight * branch.squaredNorm();
        if (w > 1e-14) {
          comps.push_back({w, branch.normalized()});
          total += w;
        }
      }
    }
    for (auto& c : comps) c.weight /= total;
    return {prob, state.with_decomposition(std::move(comps))};
  }
  return {prob, std::move(state)};
}

namespace {

void check_witness_args(double p, ParityIndex parity) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("witness parameter p must lie in (0,1)");
  if (parity.local_dim() != 2) throw DomainError("the witness is defined for bits (d=2)");
}

PureStateSpec pair_spec(std::map<std::vector<int>, Complex> coeffs, int parity) {
  return {SystemSignature(2, 1, 1), FactorPermutation::identity(1, 1), std::move(coeffs), {parity}, {}};
}

}  // namespace

ComplexVector witness_target(double p, ParityIndex parity) {
  check_witness_args(p, parity);
  return build_pure_state(pair_spec({{{0}, std::sqrt(p)}, {{1}, std::sqrt(1.0 - p)}}, parity.value()));
}

Povm witness_povm(double p, ParityIndex parity) {
  check_witness_args(p, parity);
  const SystemSignature sig(2, 1, 1);
  const int k = parity.value();
  const int other = 1 - k;
  Effect yes = Effect::from_terms(
      sig, {{1.0, pair_spec({{{0}, std::sqrt(p)}, {{1}, std::sqrt(1.0 - p)}}, k)}});
  Effect no = Effect::from_terms(
      sig, {{1.0, pair_spec({{{0}, std::sqrt(1.0 - p)}, {{1}, -std::sqrt(p)}}, k)},
            {1.0, pair_spec({{{0}, 1.0}}, other)},
            {1.0, pair_spec({{{1}, 1.0}}, other)}});
  return Povm({std::move(yes), std::move(no)});
}

WorstCaseSeparable worst_case_no_probability(double p, double grid_step, int parity) {
  if (!(grid_step > 0.0 && grid_step <= 0.1)) throw DomainError("grid step must lie in (0, 0.1]");
  const Povm povm = witness_povm(p, ParityIndex(parity, 2));
  const SystemSignature sig(2, 1, 1);
  const long n = std::lround(1.0 / grid_step);
  WorstCaseSeparable best{2.0, {}};
  RealMatrix gamma(2, 2);
  for (long a = 0; a <= n; ++a) {
    for (long b = 0; a + b <= n; ++b) {
      for (long c = 0; a + b + c <= n; ++c) {
        gamma << double(a) / n, double(b) / n, double(c) / n, double(n - a - b - c) / n;
        SeparableSpec spec{gamma, {}};
        const double p_no = born_probabilities(povm, build_separable(spec, sig))[1];
        if (p_no < best.min_p_no) best = {p_no, std::move(spec)};
      }
    }
  }
  return best;
}

}  // namespace duoc
