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


#include "duoc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "duoc/errors.hpp"

namespace duoc::oracle {

namespace {

long ipow(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of `index` over `count` factors of dimension d, most significant first.
std::vector<int> digits_of(long index, int count, int d) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int f = count - 1; f >= 0; --f) {
    out[static_cast<std::size_t>(f)] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

long index_of(const std::vector<int>& digits, int d) {
  long idx = 0;
  for (int x : digits) idx = idx * d + x;
  return idx;
}

// Full index from the digits of the subset factors and of the rest.
struct Splitter {
  int d;
  int factors;
  std::vector<int> subset;
  std::vector<int> rest;

  Splitter(int d_, int factors_, std::span<const int> sub) : d(d_), factors(factors_) {
    std::vector<bool> in(static_cast<std::size_t>(factors), false);
    for (int f : sub) {
      if (f < 0 || f >= factors || in[static_cast<std::size_t>(f)]) {
        throw DomainError("oracle: bad factor subset");
      }
      in[static_cast<std::size_t>(f)] = true;
    }
    for (int f = 0; f < factors; ++f) (in[static_cast<std::size_t>(f)] ? subset : rest).push_back(f);
  }

  long sub_dim() const { return ipow(d, static_cast<int>(subset.size())); }
  long rest_dim() const { return ipow(d, static_cast<int>(rest.size())); }

  long join(long s, long r) const {
    const auto sd = digits_of(s, static_cast<int>(subset.size()), d);
    const auto rd = digits_of(r, static_cast<int>(rest.size()), d);
    std::vector<int> full(static_cast<std::size_t>(factors));
    for (std::size_t i = 0; i < subset.size(); ++i) full[static_cast<std::size_t>(subset[i])] = sd[i];
    for (std::size_t i = 0; i < rest.size(); ++i) full[static_cast<std::size_t>(rest[i])] = rd[i];
    return index_of(full, d);
  }
};

SystemSignature restricted(const SystemSignature& sig, const std::vector<int>& positions) {
  int m = 0;
  int n = 0;
  for (int p : positions) (p < sig.classical() ? m : n) += 1;
  return SystemSignature(sig.local_dim(), m, n);
}

}  // namespace

PureStateSpec random_valid_state(const SystemSignature& sig, Rng& rng) {
  const int d = sig.local_dim();
  const int m = sig.classical();
  const int n = sig.anticlassical();
  const int k = std::min(m, n);
  PureStateSpec spec{sig, {random_permutation(m, rng), random_permutation(n, rng)}, {}, {}, {}};
  for (int i = 0; i < k; ++i) spec.parity.push_back(rng.below(d));
  for (int i = 0; i < std::abs(m - n); ++i) spec.tail.push_back(rng.below(d));
  double norm2 = 0.0;
  for (long x = 0; x < ipow(d, k); ++x) {
    const Complex a = rng.complex_normal();
    norm2 += std::norm(a);
    spec.coeffs[digits_of(x, k, d)] = a;
  }
  for (auto& [key, a] : spec.coeffs) a /= std::sqrt(norm2);
  return spec;
}

PureStateSpec random_valid_state(const SystemSignature& sig, std::uint64_t seed) {
  Rng rng(seed);
  return random_valid_state(sig, rng);
}

ComplexVector realize(const PureStateSpec& spec) {
  const int d = spec.sig.local_dim();
  const int m = spec.sig.classical();
  const int n = spec.sig.anticlassical();
  const int k = std::min(m, n);
  ComplexVector out = ComplexVector::Zero(ipow(d, m + n));
  for (const auto& [x, alpha] : spec.coeffs) {
    std::vector<int> dits(static_cast<std::size_t>(m));
    std::vector<int> antidits(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
      dits[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
      antidits[static_cast<std::size_t>(i)] =
          (x[static_cast<std::size_t>(i)] + spec.parity[static_cast<std::size_t>(i)]) % d;
    }
    auto& longer = m <= n ? antidits : dits;
    for (std::size_t t = 0; t < spec.tail.size(); ++t) longer[static_cast<std::size_t>(k) + t] = spec.tail[t];

    std::vector<int> full(static_cast<std::size_t>(m + n));
    for (int i = 0; i < m; ++i) {
      full[static_cast<std::size_t>(spec.perm.sigma[static_cast<std::size_t>(i)])] =
          dits[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
      full[static_cast<std::size_t>(m + spec.perm.tau[static_cast<std::size_t>(i)])] =
          antidits[static_cast<std::size_t>(i)];
    }
    out(index_of(full, d)) += alpha;
  }
  return out;
}

ComplexVector contract_branch(const ComplexVector& psi, const SystemSignature& sig,
                              const ComplexVector& e, std::span<const int> subset) {
  const Splitter split(sig.local_dim(), sig.factor_count(), subset);
  if (psi.size() != sig.dimension() || e.size() != split.sub_dim()) {
    throw ShapeError("oracle: contraction dimension mismatch");
  }
  ComplexVector out = ComplexVector::Zero(split.rest_dim());
  for (long r = 0; r < split.rest_dim(); ++r) {
    for (long s = 0; s < split.sub_dim(); ++s) out(r) += std::conj(e(s)) * psi(split.join(s, r));
  }
  return out;
}

Contraction conditional_contraction(const ComplexOperator& rho, const SystemSignature& sig,
                                    const ComplexOperator& effect, std::span<const int> subset) {
  const Splitter split(sig.local_dim(), sig.factor_count(), subset);
  const long sd = split.sub_dim();
  const long rd = split.rest_dim();
  if (rho.rows() != sig.dimension() || effect.rows() != sd) {
    throw ShapeError("oracle: contraction dimension mismatch");
  }
  Contraction out{0.0, ComplexOperator::Zero(rd, rd)};
  for (long r = 0; r < rd; ++r) {
    for (long c = 0; c < rd; ++c) {
      Complex acc = 0.0;
      for (long s = 0; s < sd; ++s) {
        for (long t = 0; t < sd; ++t) acc += effect(s, t) * rho(split.join(t, r), split.join(s, c));
      }
      out.unnormalized_post(r, c) = acc;
    }
  }
  for (long r = 0; r < rd; ++r) out.probability += out.unnormalized_post(r, r).real();
  return out;
}

ConsistencyReport brute_force_conditional_check(int trials, const SystemSignature& sig,
                                                std::uint64_t seed, EffectMode mode) {
  const int f = sig.factor_count();
  if (f < 2) throw DomainError("oracle: need at least two factors for a proper subset");
  Rng rng(seed);
  ConsistencyReport report;
  for (int trial = 0; trial < trials; ++trial) {
    ++report.trials;
    const int terms = 1 + rng.below(3);
    std::vector<double> q;
    std::vector<ComplexVector> psis;
    double total = 0.0;
    for (int j = 0; j < terms; ++j) {
      q.push_back(rng.uniform(0.05, 1.0));
      total += q.back();
      psis.push_back(realize(random_valid_state(sig, rng)));
    }
    ComplexOperator rho = ComplexOperator::Zero(sig.dimension(), sig.dimension());
    for (int j = 0; j < terms; ++j) {
      q[static_cast<std::size_t>(j)] /= total;
      rho += q[static_cast<std::size_t>(j)] * psis[static_cast<std::size_t>(j)] *
             psis[static_cast<std::size_t>(j)].adjoint();
    }

    const long mask = 1 + rng.below(static_cast<int>(ipow(2, f)) - 2);
    std::vector<int> subset;
    std::vector<int> rest;
    for (int p = 0; p < f; ++p) ((mask >> p) & 1 ? subset : rest).push_back(p);
    const auto sub_sig = restricted(sig, subset);
    const auto post_sig = restricted(sig, rest);

    std::vector<double> w;
    std::vector<ComplexVector> es;
    if (mode == EffectMode::kCertified) {
      const int k = 1 + rng.below(3);
      const double budget = rng.uniform(0.2, 1.0);
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        w.push_back(rng.uniform(0.05, 1.0));
        sum += w.back();
        es.push_back(realize(random_valid_state(sub_sig, rng)));
      }
      for (auto& x : w) x *= budget / sum;
    } else {
      w.push_back(1.0);
      es.push_back(random_unit_vector(sub_sig.dimension(), rng));
    }
    ComplexOperator effect = ComplexOperator::Zero(sub_sig.dimension(), sub_sig.dimension());
    for (std::size_t i = 0; i < es.size(); ++i) effect += w[i] * es[i] * es[i].adjoint();

    const auto contraction = conditional_contraction(rho, sig, effect, subset);
    if (contraction.probability <= 1e-12) {
      ++report.skipped;
      continue;
    }
    bool failed = contraction.probability > 1.0 + 1e-12;

    ComplexOperator rebuilt = ComplexOperator::Zero(post_sig.dimension(), post_sig.dimension());
    for (int j = 0; j < terms; ++j) {
      for (std::size_t i = 0; i < es.size(); ++i) {
        const ComplexVector branch = contract_branch(psis[static_cast<std::size_t>(j)], sig, es[i], subset);
        const double weight = q[static_cast<std::size_t>(j)] * w[i];
        rebuilt += weight * branch * branch.adjoint();
        const double n2 = branch.squaredNorm();
        if (n2 <= 1e-8) continue;
        if (!validate_pure_state(branch / std::sqrt(n2), post_sig).valid) failed = true;
      }
    }
    double err = 0.0;
    for (long r = 0; r < rebuilt.rows(); ++r) {
      for (long c = 0; c < rebuilt.cols(); ++c) {
        err = std::max(err, std::abs(rebuilt(r, c) - contraction.unnormalized_post(r, c)));
      }
    }
    err /= contraction.probability;
    report.max_reconstruction_error = std::max(report.max_reconstruction_error, err);
    if (err > 1e-9) failed = true;
    if (failed) ++report.failures;
  }
  return report;
}

std::vector<SystemSignature> consistency_signatures() {
  std::vector<SystemSignature> out;
  for (int d : {2, 3}) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        if (m + n >= 2) out.emplace_back(d, m, n);
      }
    }
  }
  return out;
}

ConsistencyReport consistency_sweep(int trials, std::uint64_t seed, EffectMode mode) {
  const auto sigs = consistency_signatures();
  const int count = static_cast<int>(sigs.size());
  ConsistencyReport total;
  for (int i = 0; i < count; ++i) {
    const int share = trials / count + (i < trials % count ? 1 : 0);
    const auto r = brute_force_conditional_check(
        share, sigs[static_cast<std::size_t>(i)],
        seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1), mode);
    total.trials += r.trials;
    total.failures += r.failures;
    total.skipped += r.skipped;
    total.max_reconstruction_error = std::max(total.max_reconstruction_error, r.max_reconstruction_error);
  }
  return total;
}

double pair_hull_distance(const ComplexOperator& rho, int resolution, int iterations) {
  if (rho.rows() != 4 || rho.cols() != 4) throw ShapeError("oracle: expected a 4x4 matrix");
  // Atoms: cos(t)|0,k> + e^{i f} sin(t)|1,1+k>, t in [0, pi/2], f in [0, 2 pi).
  constexpr double kPi = 3.14159265358979323846;
  std::vector<ComplexOperator> atoms;
  for (int k = 0; k < 2; ++k) {
    const long lo = k;           // index of |0,k>
    const long hi = 2 + (1 - k); // index of |1,1+k>
    for (int a = 0; a <= resolution; ++a) {
      const double t = 0.5 * kPi * a / resolution;
      const int phases = (a == 0 || a == resolution) ? 1 : 2 * resolution;
      for (int b = 0; b < phases; ++b) {
        const double f = 2.0 * kPi * b / phases;
        ComplexVector v = ComplexVector::Zero(4);
        v(lo) = std::cos(t);
        v(hi) = std::polar(std::sin(t), f);
        atoms.push_back(v * v.adjoint());
      }
    }
  }
  const auto inner = [](const ComplexOperator& a, const ComplexOperator& b) {
    double acc = 0.0;
    for (long r = 0; r < 4; ++r) {
      for (long c = 0; c < 4; ++c) acc += (std::conj(a(r, c)) * b(r, c)).real();
    }
    return acc;
  };
  ComplexOperator sigma = atoms.front();
  for (int it = 0; it < iterations; ++it) {
    const ComplexOperator grad = sigma - rho;
    std::size_t best = 0;
    double best_val = inner(grad, atoms[0]);
    for (std::size_t i = 1; i < atoms.size(); ++i) {
      const double v = inner(grad, atoms[i]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    const ComplexOperator dir = atoms[best] - sigma;
    const double denom = inner(dir, dir);
    if (denom <= 0.0) break;
    const double step = std::clamp(-inner(grad, dir) / denom, 0.0, 1.0);
    if (step == 0.0) break;
    sigma += step * dir;
  }
  return std::sqrt(inner(sigma - rho, sigma - rho));
}

double separable_grid_min(double p, const GridSpec& grid, int parity) {
  if (parity != 0 && parity != 1) throw DomainError("oracle: parity must be 0 or 1");
  if (!(grid.step > 0.0) || grid.step > 1.0) throw DomainError("oracle: grid step must lie in (0,1]");
  const long steps = std::lround(1.0 / grid.step);
  const auto inside = [&](int which, double g) {
    const auto [lo, hi] = grid.ranges[static_cast<std::size_t>(which)];
    return g >= lo - 1e-12 && g <= hi + 1e-12;
  };
  double best = 2.0;
  bool any = false;
  for (long a = 0; a <= steps; ++a) {
    for (long b = 0; a + b <= steps; ++b) {
      for (long c = 0; a + b + c <= steps; ++c) {
        const double g00 = static_cast<double>(a) / static_cast<double>(steps);
        const double g01 = static_cast<double>(b) / static_cast<double>(steps);
        const double g10 = static_cast<double>(c) / static_cast<double>(steps);
        if (!inside(0, g00) || !inside(1, g01) || !inside(2, g10)) continue;
        const double g11 = static_cast<double>(steps - a - b - c) / static_cast<double>(steps);
        const double yes = parity == 0 ? g00 * p + g11 * (1.0 - p) : g01 * p + g10 * (1.0 - p);
        best = std::min(best, 1.0 - yes);
        any = true;
      }
    }
  }
  if (!any) throw DomainError("oracle: grid ranges select no point of the simplex");
  return best;
}

}  // namespace duoc::oracle
