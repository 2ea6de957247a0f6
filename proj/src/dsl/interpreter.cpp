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


#include "duoc/dsl/interpreter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "duoc/dsl/lexer.hpp"
#include "duoc/dsl/printer.hpp"
#include "duoc/dynamics.hpp"
#include "duoc/errors.hpp"
#include "duoc/nonlocality.hpp"
#include "duoc/oracle.hpp"
#include "duoc/sampling.hpp"

namespace duoc::dsl {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Transform {
  SystemSignature sig;
  ComplexOperator unitary;
};

class Interpreter {
 public:
  Interpreter(const Script& script, const RunConfig& cfg) : script_(script), cfg_(cfg) {
    outcome_.table.metadata = {script.name, cfg.seed, cfg.tolerance, kEngineVersion};
  }

  RunOutcome run() {
    for (const auto& st : script_.statements) {
      try {
        std::visit([&](const auto& body) { exec(body, st.loc); }, st.body);
      } catch (const ScriptError&) {
        throw;
      } catch (const Error& e) {
        throw ScriptError(st.loc, e.what());
      }
    }
    return std::move(outcome_);
  }

 private:
  // ---- values ----

  const Value* find(const std::vector<KeyValue>& args, const std::string& key) const {
    for (const auto& kv : args) {
      if (kv.key == key) return &kv.value;
    }
    return nullptr;
  }

  const Value& get(const std::vector<KeyValue>& args, const std::string& key, SourceLoc loc) const {
    const Value* v = find(args, key);
    if (!v) throw ScriptError(loc, "missing key '" + key + "'");
    return *v;
  }

  double eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::kNumber: return e.number;
      case Expr::Kind::kPi: return kPi;
      case Expr::Kind::kNeg: return -eval(e.args.at(0));
      case Expr::Kind::kCall: {
        const double x = eval(e.args.at(0));
        if (x < 0.0) throw ScriptError(e.loc, "sqrt of a negative number");
        return std::sqrt(x);
      }
      case Expr::Kind::kBinary: {
        const double a = eval(e.args.at(0));
        const double b = eval(e.args.at(1));
        switch (e.op) {
          case '+': return a + b;
          case '-': return a - b;
          case '*': return a * b;
          default:
            if (b == 0.0) throw ScriptError(e.loc, "division by zero");
            return a / b;
        }
      }
      case Expr::Kind::kRef: {
        const auto run = results_.find(e.name);
        if (run == results_.end()) throw ScriptError(e.loc, "run '" + e.name + "' has not executed");
        const auto q = run->second.find(e.field);
        if (q == run->second.end()) {
          throw ScriptError(e.loc, "run '" + e.name + "' has no quantity '" + e.field + "'");
        }
        return q->second;
      }
    }
    return 0.0;
  }

  double number(const Value& v) const {
    if (v.kind != Value::Kind::kExpr) throw ScriptError(v.loc, "expected a number");
    return eval(v.expr);
  }

  int integer(const Value& v) const {
    const double x = number(v);
    if (std::abs(x - std::round(x)) > 1e-9 || std::abs(x) > 1e9) {
      throw ScriptError(v.loc, "expected an integer, got " + format_number(x));
    }
    return static_cast<int>(std::lround(x));
  }

  const std::vector<Value>& list(const Value& v) const {
    if (v.kind != Value::Kind::kList) throw ScriptError(v.loc, "expected a list");
    return v.items;
  }

  std::vector<double> numbers(const Value& v) const {
    std::vector<double> out;
    for (const auto& item : list(v)) out.push_back(number(item));
    return out;
  }

  std::vector<int> integers(const Value& v) const {
    std::vector<int> out;
    for (const auto& item : list(v)) out.push_back(integer(item));
    return out;
  }

  const std::string& ident(const Value& v) const {
    if (v.kind != Value::Kind::kIdent) throw ScriptError(v.loc, "expected a name");
    return v.text;
  }

  double number_or(const std::vector<KeyValue>& args, const std::string& key, double fallback) const {
    const Value* v = find(args, key);
    return v ? number(*v) : fallback;
  }
  int integer_or(const std::vector<KeyValue>& args, const std::string& key, int fallback) const {
    const Value* v = find(args, key);
    return v ? integer(*v) : fallback;
  }
  std::vector<int> integers_or(const std::vector<KeyValue>& args, const std::string& key) const {
    const Value* v = find(args, key);
    return v ? integers(*v) : std::vector<int>{};
  }

  const DensityState& state(const Value& v) const { return states_.at(ident(v)); }
  const Povm& measure(const Value& v) const { return measures_.at(ident(v)); }
  const SystemSignature& system(const Value& v) const { return systems_.at(ident(v)); }

  static void require_pair(const SystemSignature& sig, const std::string& what, int d = 0) {
    if (sig.classical() != 1 || sig.anticlassical() != 1 || (d != 0 && sig.local_dim() != d)) {
      throw DomainError(what + " needs a " + (d == 0 ? std::string("(1,1)") : "d=" + std::to_string(d) + " (1,1)") +
                        "-composite, got " + sig.to_string());
    }
  }

  // ---- declarations ----

  void exec(const SystemDecl& d, SourceLoc loc) {
    const auto& a = d.ctor.args;
    systems_.emplace(d.name, SystemSignature(integer(get(a, "d", loc)), integer(get(a, "bits", loc)),
                                             integer(get(a, "antibits", loc))));
  }

  void exec(const StateDecl& d, SourceLoc loc) {
    if (d.ctor.name == "product") {
      states_.emplace(d.name, product(states_.at(d.ctor.operands[0]), states_.at(d.ctor.operands[1])));
      return;
    }
    const auto& sig = systems_.at(d.on);
    const auto& a = d.ctor.args;
    const auto& name = d.ctor.name;
    const int d_local = sig.local_dim();
    if (name == "entpair") {
      require_pair(sig, "entpair", 2);
      const double p = number(get(a, "p", loc));
      if (!(p > 0.0 && p < 1.0)) throw DomainError("entpair: p must lie in (0,1), got " + format_number(p));
      const ParityIndex k(integer_or(a, "parity", 0), 2);
      states_.emplace(d.name, DensityState::pure(sig, witness_target(p, k)));
    } else if (name == "pair" || name == "maxent") {
      require_pair(sig, name);
      std::vector<Complex> alphas;
      if (name == "pair") {
        for (double x : numbers(get(a, "alphas", loc))) alphas.emplace_back(x);
      } else {
        alphas.assign(static_cast<std::size_t>(d_local), Complex(1.0 / std::sqrt(static_cast<double>(d_local))));
      }
      const ComplexVector v = pair_state(alphas, integer_or(a, "parity", 0), d_local);
      if (std::abs(v.norm() - 1.0) > 1e-10) throw NormalizationError("pair: coefficients are not normalized");
      states_.emplace(d.name, DensityState::pure(sig, v));
    } else if (name == "basis") {
      const auto digits = integers(get(a, "digits", loc));
      if (static_cast<int>(digits.size()) != sig.factor_count()) {
        throw DomainError("basis: expected " + std::to_string(sig.factor_count()) + " digits");
      }
      for (int x : digits) {
        if (x < 0 || x >= d_local) throw DomainError("basis: digit out of range");
      }
      const auto dims = sig.dims();
      states_.emplace(d.name, DensityState::pure(sig, basis_vector(sig.dimension(), digits_to_index(digits, dims))));
    } else if (name == "classical") {
      if (sig.classical() != 0 && sig.anticlassical() != 0) {
        throw DomainError("classical: needs a composite of a single kind, got " + sig.to_string());
      }
      const auto probs = numbers(get(a, "probs", loc));
      if (static_cast<long>(probs.size()) != sig.dimension()) {
        throw DomainError("classical: expected " + std::to_string(sig.dimension()) + " probabilities");
      }
      Decomposition comps;
      for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] < 0.0) throw DomainError("classical: negative probability");
        if (probs[i] > 0.0) comps.push_back({probs[i], basis_vector(sig.dimension(), static_cast<long>(i))});
      }
      const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
      if (std::abs(total - 1.0) > 1e-10) throw NormalizationError("classical: probabilities do not sum to 1");
      states_.emplace(d.name, DensityState::mixture(sig, std::move(comps)));
    } else if (name == "separable") {
      require_pair(sig, "separable");
      const auto g = numbers(get(a, "gamma", loc));
      if (static_cast<int>(g.size()) != d_local * d_local) {
        throw DomainError("separable: gamma needs d*d = " + std::to_string(d_local * d_local) + " weights");
      }
      SeparableSpec spec;
      spec.gamma = RealMatrix(d_local, d_local);
      for (int i = 0; i < d_local; ++i) {
        for (int j = 0; j < d_local; ++j) spec.gamma(i, j) = g[static_cast<std::size_t>(i * d_local + j)];
      }
      states_.emplace(d.name, build_separable(spec, sig));
    } else if (name == "random") {
      const int terms = integer_or(a, "terms", 2);
      if (terms < 1) throw DomainError("random: terms must be positive");
      const Value* seed = find(a, "seed");
      Rng rng(seed ? static_cast<std::uint64_t>(integer(*seed)) : cfg_.seed);
      states_.emplace(d.name, random_mixed_state(sig, terms, rng));
    } else if (name == "purify") {
      const auto& rho = state(get(a, "state", loc));
      if (rho.signature().local_dim() != d_local || rho.signature().classical() != sig.classical()) {
        throw DomainError("purify: target " + sig.to_string() + " does not extend " + rho.signature().to_string());
      }
      auto parity = integers_or(a, "parity");
      auto tail = integers_or(a, "tail");
      if (!find(a, "parity")) parity.assign(static_cast<std::size_t>(sig.classical()), 0);
      if (!find(a, "tail")) tail.assign(static_cast<std::size_t>(std::max(sig.anticlassical() - sig.classical(), 0)), 0);
      std::vector<double> phases;
      if (const Value* v = find(a, "phases")) phases = numbers(*v);
      const auto spec = purify_classical_state(rho, sig.anticlassical(),
                                               FactorPermutation::identity(sig.classical(), sig.anticlassical()),
                                               parity, tail, phases);
      states_.emplace(d.name, DensityState::pure(sig, build_pure_state(spec)));
    }
  }

  // X (x) Y with factors regrouped to canonical order.
  static DensityState product(const DensityState& x, const DensityState& y) {
    const auto& sx = x.signature();
    const auto& sy = y.signature();
    if (sx.local_dim() != sy.local_dim()) throw DomainError("product: local dimensions differ");
    const SystemSignature sig(sx.local_dim(), sx.classical() + sy.classical(),
                              sx.anticlassical() + sy.anticlassical());
    const int fx = sx.factor_count();
    std::vector<int> order;
    for (int i = 0; i < sx.classical(); ++i) order.push_back(i);
    for (int i = 0; i < sy.classical(); ++i) order.push_back(fx + i);
    for (int i = 0; i < sx.anticlassical(); ++i) order.push_back(sx.classical() + i);
    for (int i = 0; i < sy.anticlassical(); ++i) order.push_back(fx + sy.classical() + i);
    const auto dims = sig.dims();
    if (x.decomposition() && y.decomposition()) {
      Decomposition comps;
      for (const auto& a : *x.decomposition()) {
        for (const auto& b : *y.decomposition()) {
          comps.push_back({a.weight * b.weight, permute_factors(tensor_product(a.vector, b.vector), dims, order)});
        }
      }
      return DensityState::mixture(sig, std::move(comps));
    }
    return DensityState(sig, permute_operator_factors(tensor_product(x.matrix(), y.matrix()), dims, order));
  }

  static Effect projector_effect(const SystemSignature& sig, const ComplexVector& v) {
    const auto report = validate_pure_state(v, sig);
    if (!report.valid || !report.spec) throw ValidityError("effect vector is not a valid pure state");
    return Effect::from_terms(sig, {{1.0, *report.spec}});
  }

  void exec(const MeasureDecl& d, SourceLoc loc) {
    const auto& sig = systems_.at(d.on);
    const auto& a = d.ctor.args;
    const auto& name = d.ctor.name;
    if (name == "witness") {
      require_pair(sig, "witness", 2);
      measures_.emplace(d.name, witness_povm(number(get(a, "p", loc)), ParityIndex(integer_or(a, "parity", 0), 2)));
    } else if (name == "basis") {
      std::vector<Effect> effects;
      for (long i = 0; i < sig.dimension(); ++i) effects.push_back(projector_effect(sig, basis_vector(sig.dimension(), i)));
      measures_.emplace(d.name, Povm(std::move(effects)));
    } else if (name == "parity") {
      require_pair(sig, "parity");
      const int dl = sig.local_dim();
      std::vector<Effect> effects;
      for (int k = 0; k < dl; ++k) {
        std::vector<EffectTerm> terms;
        for (int i = 0; i < dl; ++i) {
          terms.push_back({1.0, PureStateSpec{sig, FactorPermutation::identity(1, 1), {{{i}, Complex(1.0)}}, {k}, {}}});
        }
        effects.push_back(Effect::from_terms(sig, std::move(terms)));
      }
      measures_.emplace(d.name, Povm(std::move(effects)));
    } else if (name == "unit") {
      measures_.emplace(d.name, Povm({Effect::identity(sig)}));
    } else if (name == "side") {
      require_pair(sig, "side", 2);
      const auto& party = ident(get(a, "party", loc));
      if (party != "alice" && party != "bob") {
        throw ScriptError(get(a, "party", loc).loc, "party must be alice or bob");
      }
      measures_.emplace(d.name, side_povm(party == "alice" ? Party::kAlice : Party::kBob,
                                          LocalBasis::rotation(number(get(a, "angle", loc)))));
    }
  }

  void exec(const TransformDecl& d, SourceLoc loc) {
    const auto& a = d.ctor.args;
    const auto& sig = system(get(a, "system", loc));
    ReversibleSpec spec{FactorPermutation::identity(sig.classical(), sig.anticlassical()),
                        std::vector<int>(static_cast<std::size_t>(sig.factor_count()), 0),
                        std::vector<int>(static_cast<std::size_t>(sig.factor_count()), 0)};
    if (const Value* v = find(a, "sigma")) spec.perm.sigma = integers(*v);
    if (const Value* v = find(a, "tau")) spec.perm.tau = integers(*v);
    if (const Value* v = find(a, "x")) spec.x_shifts = integers(*v);
    if (const Value* v = find(a, "z")) spec.z_phases = integers(*v);
    transforms_.emplace(d.name, Transform{sig, build_reversible(spec, sig)});
  }

  // ---- runs ----

  void row(const std::string& label, const std::string& kind, const std::string& quantity, double value) {
    outcome_.table.rows.push_back({label, kind, quantity, value});
    results_[label][quantity] = value;
  }

  void exec(const RunDecl& d, SourceLoc loc) {
    ++run_count_;
    const std::string label = run_label(d, run_count_);
    const auto& a = d.args;
    const auto put = [&](const std::string& q, double v) { row(label, d.kind, q, v); };
    if (d.kind == "born") {
      run_born(a, loc, put);
    } else if (d.kind == "chsh") {
      auto s = ChshSettings::optimal();
      if (const Value* v = find(a, "alice")) set_angles(s.alice, *v);
      if (const Value* v = find(a, "bob")) set_angles(s.bob, *v);
      const auto r = chsh_value(s);
      put_expectations(r.expectations, put);
      put("F", r.f);
    } else if (d.kind == "activation") {
      run_activation(a, loc, put);
    } else if (d.kind == "witness") {
      const double p = number(get(a, "p", loc));
      const double grid = number_or(a, "grid", 0.01);
      const int parity = integer_or(a, "parity", 0);
      const auto worst = worst_case_no_probability(p, grid, parity);
      const auto povm = witness_povm(p, ParityIndex(parity, 2));
      const auto target = DensityState::pure(SystemSignature(2, 1, 1), witness_target(p, ParityIndex(parity, 2)));
      put("min_p_no", worst.min_p_no);
      put("oracle_min_p_no", oracle::separable_grid_min(p, {grid}, parity));
      put("bound", std::min(p, 1.0 - p));
      put("p_no_target", born_probabilities(povm, target)[1]);
    } else if (d.kind == "conditional") {
      run_conditional(a, loc, put);
    } else if (d.kind == "span") {
      const auto dims = span_dimensions(system(get(a, "system", loc)),
                                        static_cast<unsigned long long>(integer_or(a, "seed", 7)));
      put("product_span_dim", dims.product_span_dim);
      put("state_span_dim", dims.state_span_dim);
    }
  }

  template <typename Put>
  static void put_expectations(const std::array<std::array<double, 2>, 2>& e, const Put& put) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        put("E" + std::to_string(i) + std::to_string(j),
            e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
  }

  void set_angles(std::array<ChshSetting, 2>& side, const Value& v) const {
    const auto angles = numbers(v);
    if (angles.size() != 2) throw ScriptError(v.loc, "expected two angles");
    for (std::size_t i = 0; i < 2; ++i) side[i].basis = LocalBasis::rotation(angles[i]);
  }

  template <typename Put>
  void run_born(const std::vector<KeyValue>& a, SourceLoc loc, const Put& put) {
    DensityState rho = state(get(a, "state", loc));
    const auto& povm = measure(get(a, "measure", loc));
    const auto& sig = rho.signature();
    if (const Value* t = find(a, "transform")) {
      const auto& tr = transforms_.at(ident(*t));
      if (!(tr.sig == sig)) throw DomainError("transform acts on " + tr.sig.to_string() + ", state is " + sig.to_string());
      rho = DensityState(sig, tr.unitary * rho.matrix() * tr.unitary.adjoint());
    }
    std::vector<double> probs;
    if (const Value* on = find(a, "on")) {
      auto factors = integers(*on);
      std::sort(factors.begin(), factors.end());
      for (int f : factors) {
        if (f < 0 || f >= sig.factor_count()) throw ScriptError(on->loc, "factor index out of range");
      }
      if (!(sig.restrict_to(factors) == povm.signature())) {
        throw DomainError("measurement acts on " + povm.signature().to_string() + " but the factors form " +
                          sig.restrict_to(factors).to_string());
      }
      const auto dims = sig.dims();
      for (const auto& e : povm.effects()) probs.push_back(trace_of_product(embed_on_factors(e.op, dims, factors), rho.matrix()));
    } else {
      probs = born_probabilities(povm, rho);
    }
    for (std::size_t i = 0; i < probs.size(); ++i) put("p" + std::to_string(i), probs[i]);
  }

  template <typename Put>
  void run_activation(const std::vector<KeyValue>& a, SourceLoc loc, const Put& put) {
    ComplexVector psi;
    int d = 0;
    int parity = integer_or(a, "parity", 0);
    if (const Value* s = find(a, "state")) {
      const auto& rho = state(*s);
      require_pair(rho.signature(), "activation");
      d = rho.signature().local_dim();
      Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(rho.matrix());
      if (eig.eigenvalues()(eig.eigenvalues().size() - 1) < 1.0 - 1e-9) {
        throw DomainError("activation needs a pure state");
      }
      psi = eig.eigenvectors().col(eig.eigenvalues().size() - 1);
      const auto report = validate_pure_state(psi, rho.signature());
      if (!report.valid) throw ValidityError("activation: state is not a valid pure state");
      parity = report.spec->parity.at(0);
    } else {
      std::vector<Complex> alphas;
      for (double x : numbers(get(a, "alphas", loc))) alphas.emplace_back(x);
      d = static_cast<int>(alphas.size());
      psi = pair_state(alphas, parity, d);
    }
    std::vector<Complex> alphas;
    for (int i = 0; i < d; ++i) alphas.push_back(psi(static_cast<long>(i) * d + oplus(i, parity, d)));
    const auto setup = activation_setup(alphas, parity, d);
    const auto value = activation_f(setup, psi);
    put("alpha_prime", setup.alpha_prime);
    put("beta_prime", setup.beta_prime);
    put("theta", setup.theta);
    put_expectations(value.expectations, put);
    put("F_simulated", value.f_simulated);
    put("F_closed", value.f_closed);
  }

  template <typename Put>
  void run_conditional(const std::vector<KeyValue>& a, SourceLoc loc, const Put& put) {
    if (const Value* t = find(a, "trials")) {
      const int trials = integer(*t);
      if (trials < 0) throw ScriptError(t->loc, "trials must be non-negative");
      const auto mode = integer_or(a, "corrupt", 0) != 0 ? oracle::EffectMode::kCorrupted
                                                         : oracle::EffectMode::kCertified;
      const auto report = find(a, "system")
                              ? oracle::brute_force_conditional_check(trials, system(get(a, "system", loc)), cfg_.seed, mode)
                              : oracle::consistency_sweep(trials, cfg_.seed, mode);
      put("trials", report.trials);
      put("failures", report.failures);
      put("skipped", report.skipped);
      put("max_reconstruction_error", report.max_reconstruction_error);
      return;
    }
    const auto& rho = state(get(a, "state", loc));
    const auto& povm = measure(get(a, "measure", loc));
    const Value& on = get(a, "on", loc);
    const int outcome = integer_or(a, "outcome", 0);
    if (outcome < 0 || outcome >= static_cast<int>(povm.size())) {
      throw DomainError("outcome " + std::to_string(outcome) + " out of range");
    }
    const auto factors = integers(on);
    const auto result = conditional_state(rho, povm[static_cast<std::size_t>(outcome)], factors);
    put("probability", result.probability);
    if (!result.post) return;
    put("valid", validate_mixed_state(*result.post).valid ? 1.0 : 0.0);
    if (const Value* c = find(a, "compare")) {
      const auto& ref = state(*c);
      if (!(ref.signature() == result.post->signature())) {
        throw DomainError("compare: state is on " + ref.signature().to_string() + ", result is on " +
                          result.post->signature().to_string());
      }
      put("distance", max_abs(result.post->matrix() - ref.matrix()));
    }
  }

  void exec(const AssertDecl& d, SourceLoc loc) {
    const double lhs = eval(d.lhs);
    const double rhs = eval(d.rhs);
    const double tol = d.tol ? eval(*d.tol) : cfg_.tolerance;
    bool ok = false;
    if (d.cmp == "==") ok = std::abs(lhs - rhs) <= tol;
    else if (d.cmp == "!=") ok = std::abs(lhs - rhs) > tol;
    else if (d.cmp == "<=") ok = lhs <= rhs + tol;
    else if (d.cmp == ">=") ok = lhs >= rhs - tol;
    else if (d.cmp == "<") ok = lhs < rhs;
    else if (d.cmp == ">") ok = lhs > rhs;
    if (!ok) {
      outcome_.failures.push_back(
          {loc, "assertion failed: " + print_expr(d.lhs) + " " + d.cmp + " " + print_expr(d.rhs) + " (lhs " +
                    format_number(lhs) + ", rhs " + format_number(rhs) + ", tol " + format_number(tol) + ")"});
    }
  }

  void exec(const EmitDecl& d, SourceLoc) {
    parse_format(d.format);
    outcome_.emit = d;
  }

  const Script& script_;
  RunConfig cfg_;
  RunOutcome outcome_;
  int run_count_ = 0;
  std::map<std::string, SystemSignature> systems_;
  std::map<std::string, DensityState> states_;
  std::map<std::string, Povm> measures_;
  std::map<std::string, Transform> transforms_;
  std::map<std::string, std::map<std::string, double>> results_;
};

}  // namespace

RunOutcome run_script(const Script& script, const RunConfig& cfg) { return Interpreter(script, cfg).run(); }

double default_tolerance() {
  const char* env = std::getenv("DUOC_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol >= 0.0)) {
    throw DomainError(std::string("DUOC_TOL is not a non-negative number: '") + env + "'");
  }
  return tol;
}

}  // namespace duoc::dsl
