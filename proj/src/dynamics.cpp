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

#include "duoc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "duoc/sampling.hpp"

namespace duoc {

namespace {

Complex root_of_unity(int d, int power) {
  return std::polar(1.0, 2.0 * std::numbers::pi * power / d);
}

void check_string(const std::vector<int>& s, const SystemSignature& sig, const char* what) {
  if (static_cast<int>(s.size()) != sig.factor_count()) {
    throw DomainError(std::string(what) + " string has length " + std::to_string(s.size()) +
                      ", expected " + std::to_string(sig.factor_count()));
  }
  for (int x : s) {
    if (x < 0 || x >= sig.local_dim()) throw DomainError(std::string(what) + " digit out of range");
  }
}

}  // namespace

ComplexOperator generalized_x(int local_dim, int j) {
  ComplexOperator x = ComplexOperator::Zero(local_dim, local_dim);
  for (int s = 0; s < local_dim; ++s) x(oplus(s, j, local_dim), s) = 1.0;
  return x;
}

ComplexOperator generalized_z(int local_dim, int j) {
  ComplexOperator z = ComplexOperator::Zero(local_dim, local_dim);
  for (int s = 0; s < local_dim; ++s) z(s, s) = root_of_unity(local_dim, oplus(s, j, local_dim));
  return z;
}

ComplexOperator build_reversible(const ReversibleSpec& spec, const SystemSignature& sig) {
  check_string(spec.x_shifts, sig, "shift");
  check_string(spec.z_phases, sig, "phase");
  const auto dest = permuted_positions(sig, spec.perm);
  const auto dims = sig.dims();
  const auto strides = factor_strides(dims);
  const int d = sig.local_dim();
  const long dim = sig.dimension();
  ComplexOperator u = ComplexOperator::Zero(dim, dim);
  for (long c = 0; c < dim; ++c) {
    const auto digits = index_to_digits(c, dims);
    int phase_power = 0;
    long target = 0;
    for (std::size_t f = 0; f < digits.size(); ++f) {
      phase_power += oplus(digits[f], spec.z_phases[f], d);
      target += oplus(digits[f], spec.x_shifts[f], d) * strides[static_cast<std::size_t>(dest[f])];
    }
    u(target, c) = root_of_unity(d, phase_power % d);
  }
  return u;
}

// ---------------------------------------------------------------- conditional evolutions

namespace {

struct Wiring {
  std::vector<int> joint_dims;
  std::vector<int> effect_positions;  // joint positions in effect factor order
  std::vector<int> output_positions;  // joint positions of B
  SystemSignature output_sig;
};

Wiring wire(const ConditionalEvolutionSpec& spec, const SystemSignature& input) {
  const auto& anc = spec.ancilla.signature();
  if (anc.local_dim() != input.local_dim() || spec.effect.sig.local_dim() != input.local_dim()) {
    throw DomainError("conditional evolution mixes local dimensions");
  }
  std::vector<int> c_sorted = spec.c_factors;
  std::sort(c_sorted.begin(), c_sorted.end());
  detail::check_factor_set(c_sorted, static_cast<std::size_t>(anc.factor_count()));
  const int a_count = input.factor_count();

  std::vector<int> positions;
  int c_dits = 0;
  int c_anti = 0;
  for (int i = 0; i < input.classical(); ++i) positions.push_back(i);
  for (int c : c_sorted) {
    if (anc.kind(c) == FactorKind::kClassical) {
      positions.push_back(a_count + c);
      ++c_dits;
    }
  }
  for (int i = 0; i < input.anticlassical(); ++i) positions.push_back(input.classical() + i);
  for (int c : c_sorted) {
    if (anc.kind(c) == FactorKind::kAntiClassical) {
      positions.push_back(a_count + c);
      ++c_anti;
    }
  }
  const SystemSignature expected(input.local_dim(), input.classical() + c_dits,
                                 input.anticlassical() + c_anti);
  if (!(spec.effect.sig == expected)) {
    throw DomainError("effect acts on " + spec.effect.sig.to_string() + " but the wiring needs " +
                      expected.to_string());
  }
  const auto b = anc.complement(c_sorted);
  if (b.empty()) throw DomainError("conditional evolution has no output factors");
  std::vector<int> out_positions;
  for (int f : b) out_positions.push_back(a_count + f);
  std::vector<int> joint_dims(static_cast<std::size_t>(a_count + anc.factor_count()),
                              input.local_dim());
  return {joint_dims, positions, out_positions, anc.restrict_to(b)};
}

ComplexOperator apply_wired(const Wiring& w, const ConditionalEvolutionSpec& spec,
                            const ComplexOperator& x) {
  const ComplexOperator joint = tensor_product(x, spec.ancilla.matrix());
  const ComplexOperator p = embed_on_factors(spec.effect.op, w.joint_dims, w.effect_positions);
  return partial_trace(joint * p, w.joint_dims, w.output_positions);
}

}  // namespace

SystemSignature output_signature(const ConditionalEvolutionSpec& spec) {
  const auto& anc = spec.ancilla.signature();
  std::vector<int> c_sorted = spec.c_factors;
  std::sort(c_sorted.begin(), c_sorted.end());
  return anc.restrict_to(anc.complement(c_sorted));
}

EvolutionResult conditional_evolution(const ConditionalEvolutionSpec& spec, const DensityState& rho) {
  const Wiring w = wire(spec, rho.signature());
  ComplexOperator t = apply_wired(w, spec, rho.matrix());
  const double prob = t.trace().real();
  if (prob <= kConditionalFloor) return {std::max(prob, 0.0), std::nullopt};
  t = (0.5 / prob) * (t + t.adjoint()).eval();
  DensityState out(w.output_sig, std::move(t));

  const auto& anc = spec.ancilla;
  if (rho.decomposition() && anc.decomposition() && spec.effect.certificate) {
    Decomposition comps;
    double total = 0.0;
    for (const auto& a : *rho.decomposition()) {
      for (const auto& s : *anc.decomposition()) {
        const ComplexVector joint = tensor_product(a.vector, s.vector);
        for (const auto& e : *spec.effect.certificate) {
          const ComplexVector branch =
              contract_factors(joint, w.joint_dims, w.effect_positions, build_pure_state(e.spec));
          const double weight = a.weight * s.weight * e.weight * branch.squaredNorm();
          if (weight > 1e-14) {
            comps.push_back({weight, branch.normalized()});
            total += weight;
          }
        }
      }
    }
    for (auto& c : comps) c.weight /= total;
    return {prob, out.with_decomposition(std::move(comps))};
  }
  return {prob, std::move(out)};
}

LinearMap as_linear_map(const ConditionalEvolutionSpec& spec, const SystemSignature& input) {
  const Wiring w = wire(spec, input);
  return [w, spec](const ComplexOperator& x) { return apply_wired(w, spec, x); };
}

// ---------------------------------------------------------------- classical channels

void check_channel(const ClassicalChannel& ch, double tol) {
  if (ch.cond_prob.size() == 0) throw DomainError("empty channel");
  if (ch.cond_prob.minCoeff() < -tol) throw DomainError("channel has a negative probability");
  for (Eigen::Index x = 0; x < ch.cond_prob.cols(); ++x) {
    if (std::abs(ch.cond_prob.col(x).sum() - 1.0) > tol) {
      throw DomainError("channel column " + std::to_string(x) + " does not sum to 1");
    }
  }
}

DensityState classical_channel_map(const ClassicalChannel& ch, const DensityState& rho) {
  check_channel(ch);
  const auto& sig = rho.signature();
  if (sig.classical() != 0 && sig.anticlassical() != 0) {
    throw NotClassicalError("channel input must be a single-kind composite");
  }
  const ComplexOperator& mat = rho.matrix();
  if (max_abs(mat - ComplexOperator(mat.diagonal().asDiagonal())) > kStructuralTol) {
    throw NotClassicalError("channel input is not diagonal in the computational basis");
  }
  if (ch.cond_prob.cols() != sig.dimension()) {
    throw DomainError("channel expects " + std::to_string(ch.cond_prob.cols()) +
                      " input strings, state has " + std::to_string(sig.dimension()));
  }
  int out_factors = 0;
  long reach = 1;
  while (reach < ch.cond_prob.rows()) {
    reach *= sig.local_dim();
    ++out_factors;
  }
  if (reach != ch.cond_prob.rows() || out_factors == 0) {
    throw DomainError("channel output count is not a power of the local dimension");
  }
  const SystemSignature out_sig = sig.classical() != 0
                                      ? SystemSignature(sig.local_dim(), out_factors, 0)
                                      : SystemSignature(sig.local_dim(), 0, out_factors);
  const long out_dim = out_sig.dimension();
  ComplexOperator out = ComplexOperator::Zero(out_dim, out_dim);
  for (long x = 0; x < sig.dimension(); ++x) {
    const double weight = mat(x, x).real();  // <x|rho|x>
    for (long y = 0; y < out_dim; ++y) out(y, y) += ch.cond_prob(y, x) * weight;
  }
  return DensityState(out_sig, std::move(out));
}

ClassicalChannel compose(const ClassicalChannel& second, const ClassicalChannel& first) {
  if (second.cond_prob.cols() != first.cond_prob.rows()) {
    throw DomainError("channel composition: output and input alphabets differ");
  }
  return {second.cond_prob * first.cond_prob};
}

// ---------------------------------------------------------------- validity

ComplexOperator choi_matrix(const LinearMap& map, long dim_in, long dim_out) {
  ComplexOperator choi = ComplexOperator::Zero(dim_in * dim_out, dim_in * dim_out);
  for (long i = 0; i < dim_in; ++i) {
    for (long j = 0; j < dim_in; ++j) {
      ComplexOperator unit = ComplexOperator::Zero(dim_in, dim_in);
      unit(i, j) = 1.0;
      const ComplexOperator image = map(unit);
      if (image.rows() != dim_out || image.cols() != dim_out) {
        throw ShapeError("map output has the wrong dimension");
      }
      choi.block(i * dim_out, j * dim_out, dim_out, dim_out) = image;
    }
  }
  return choi;
}

ValidityReport validate_transformation(const LinearMap& map, const SystemSignature& sig_in,
                                       const SystemSignature& sig_out,
                                       const TransformationCheck& check) {
  const long din = sig_in.dimension();
  const long dout = sig_out.dimension();
  Rng rng(check.seed);

  // Linearity on random operators.
  for (int trial = 0; trial < 3; ++trial) {
    ComplexOperator x(din, din);
    ComplexOperator y(din, din);
    for (long r = 0; r < din; ++r) {
      for (long c = 0; c < din; ++c) {
        x(r, c) = rng.complex_normal();
        y(r, c) = rng.complex_normal();
      }
    }
    const Complex a = rng.complex_normal();
    const Complex b = rng.complex_normal();
    const ComplexOperator lhs = map(a * x + b * y);
    const ComplexOperator rhs = a * map(x) + b * map(y);
    if (max_abs(lhs - rhs) > 1e-9 * std::max(1.0, max_abs(rhs))) {
      throw DomainError("map is not linear");
    }
  }

  ValidityReport report;
  report.certainty = Certainty::kSampled;
  const ComplexOperator choi = choi_matrix(map, din, dout);
  const ComplexOperator herm = 0.5 * (choi + choi.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(herm, Eigen::EigenvaluesOnly);
  const double lowest = eig.eigenvalues().minCoeff();
  if (max_abs(choi - choi.adjoint()) > check.cp_tol || lowest < -check.cp_tol) {
    report.witness = "not completely positive (Choi eigenvalue " + std::to_string(lowest) + ")";
    report.residual = std::max(-lowest, max_abs(choi - choi.adjoint()));
    return report;
  }

  for (int s = 0; s < check.samples; ++s) {
    const DensityState rho = random_mixed_state(sig_in, 1 + rng.below(3), rng);
    const ComplexOperator out = map(rho.matrix());
    const double tr = out.trace().real();
    if (tr > 1.0 + kStructuralTol) {
      report.witness = "trace increased to " + std::to_string(tr) + " on sample " + std::to_string(s);
      report.residual = tr - 1.0;
      return report;
    }
    // The image is a mixture of the component images.
    for (const auto& c : *rho.decomposition()) {
      const ComplexOperator part = map(projector(c.vector));
      const double ptr = part.trace().real();
      if (ptr <= kConditionalFloor) continue;
      const DensityState image(sig_out, (0.5 / ptr) * (part + part.adjoint()), check.cp_tol);
      const auto r = validate_mixed_state(image);
      if (!r.valid) {
        report.witness = "sample " + std::to_string(s) + " mapped to an invalid state (" +
                         to_string(r.certainty) + ": " + r.witness + ")";
        report.residual = r.residual;
        return report;
      }
      report.residual = std::max(report.residual, r.residual);
    }
  }
  report.valid = true;
  report.witness = "completely positive; valid on " + std::to_string(check.samples) + " samples";
  return report;
}

}  // namespace duoc
