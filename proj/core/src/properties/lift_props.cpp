// Operators lifted into the double A ⋉ V*, and generalized operators.

#include "common.hpp"

#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/ybe.hpp"

namespace nova::props {

namespace {

struct LiftDraw {
  Algebra alg;
  Bimodule module;
  Matrix alpha, beta;
  std::string label;
};

std::vector<Bimodule> valid_line_bimodules(const Algebra& alg) {
  std::vector<Bimodule> out;
  const Field& f = alg.field();
  for (const Matrix& m : all_maps(f, 2, alg.dim(), 625)) {
    Bimodule b = Bimodule::zero(alg, 1);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      b.l[i].at(0, 0) = m.at(0, i);
      b.r[i].at(0, 0) = m.at(1, i);
    }
    if (bimodule_residual(b, Eval::FailFast).zero()) out.push_back(std::move(b));
  }
  return out;
}

// Regular module, its dual, and (prime fields) a random line module.
std::vector<std::pair<Bimodule, std::string>> modules_of(Rng& rng, const Algebra& alg) {
  std::vector<std::pair<Bimodule, std::string>> out = {
      {Bimodule::regular(alg), "regular"}, {dual_bimodule(Bimodule::regular(alg), false), "dual"}};
  const auto lines = valid_line_bimodules(alg);
  if (!lines.empty()) out.push_back({lines[rng.next(lines.size())], "line"});
  return out;
}

Scalar pick_value(Rng& rng, const Field& f) {
  const auto vals = field_values(f);
  return vals[rng.next(vals.size())];
}

MassParams kappa_masses(const Scalar& kappa) {
  const Field& f = kappa.field();
  return {Scalar::zero(f), kappa, Scalar::zero(f), Scalar::zero(f)};
}

// Maps alpha for one module: zero, multiples of beta, random ones, and an extended operator
// found by enumeration when the space is small.
void add_maps(Rng& rng, const Algebra& alg, const Bimodule& v, const std::vector<Matrix>& betas,
              bool beta_hyp, const std::string& label, std::vector<LiftDraw>& out) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim(), m = v.mdim;
  const BimodNov ctx = with_trivial_product(v);
  auto draw_beta = [&] {
    if (beta_hyp || rng.next(2) == 0) return random_combination(rng, f, betas, n, m);
    return rng.matrix(f, n, m);
  };
  const Matrix beta = draw_beta();
  out.push_back({alg, v, Matrix(f, n, m), beta, label + ", alpha 0"});
  out.push_back({alg, v, rng.nonzero(f) * beta, beta, label + ", alpha b beta"});
  for (int i = 0; i < 2; ++i) out.push_back({alg, v, rng.matrix(f, n, m), draw_beta(), label + ", random alpha"});
  const auto every = all_maps(f, n, m, 81);
  if (!every.empty()) {
    const Scalar kappa = pick_value(rng, f);
    std::vector<Matrix> sols;
    for (const Matrix& a : every)
      if (ext_o_residual(ctx, a, beta, kappa_masses(kappa), Eval::FailFast).flag()) sols.push_back(a);
    if (!sols.empty())
      out.push_back({alg, v, sols[rng.next(sols.size())], beta, label + ", searched alpha"});
  }
}

std::vector<LiftDraw> lift_draws(const Setup& s, bool beta_hyp) {
  Rng rng(s.seed);
  std::vector<LiftDraw> out;
  auto per_algebra = [&](const Algebra& alg, const std::string& label) {
    for (const auto& [v, name] : modules_of(rng, alg)) {
      const BimodNov ctx = with_trivial_product(v);
      const auto betas = solution_basis(alg.field(), alg.dim(), v.mdim,
                                        both(balanced_conditions(ctx), homomorphism_conditions(ctx)));
      add_maps(rng, alg, v, betas, beta_hyp, label + ", " + name + " module", out);
    }
  };
  if (has_dim(s, 2)) {
    const auto algs = sweep_algebras(s.field);
    for (std::size_t i = 0; i < algs.size(); ++i) per_algebra(algs[i], "sweep #" + std::to_string(i));
  }
  for (std::size_t t = 0; t < s.trials; ++t)
    per_algebra(random_algebra(rng, s.field, s.dims[t % s.dims.size()]), "random #" + std::to_string(t));
  return out;
}

bool beta_hypothesis(const Bimodule& v, const Matrix& beta) {
  const BimodNov ctx = with_trivial_product(v);
  return balanced_residual(ctx, beta, Eval::FailFast).zero() &&
         homomorphism_residual(ctx, beta, Eval::FailFast).zero();
}

template <class Check>
PropertyReport run_lifts(const std::string& id, const PropertyOptions& o, bool beta_hyp, bool half,
                         Check check) {
  const Setup s = resolve(o, Field::prime(3), {2});
  if (half) require_half(s.field, id);
  Harness h(id, s.field);
  for (LiftDraw& d : lift_draws(s, beta_hyp)) {
    Inst in(d.label);
    in.alg("A", d.alg).ctx("module", with_trivial_product(d.module)).map("alpha", d.alpha).map("beta", d.beta);
    h.add(std::move(in), [d = std::move(d), check] {
      const DoubleAlg dbl = double_algebra(d.alg, d.module);
      return check(d, dbl);
    });
  }
  return h.run(o.jobs);
}

Scalar quarter_shift(const Scalar& kappa) {
  const Field& f = kappa.field();
  return (kappa + Scalar::one(f)) / Scalar(f, 4);
}

}  // namespace

PropertyReport prop_lift_bal(const PropertyOptions& o) {
  return run_lifts("P-LIFT-BAL", o, false, false, [](const LiftDraw& d, const DoubleAlg& dbl) {
    const BimodNov dual = dual_context(dbl.algebra);
    const Matrix plus = lift_map(dbl, d.beta).plus_map;
    Verdict v;
    v.same("lifted map balanced homomorphism vs beta balanced homomorphism",
           balanced_residual(dual, plus, Eval::FailFast).zero() &&
               homomorphism_residual(dual, plus, Eval::FailFast).zero(),
           beta_hypothesis(d.module, d.beta));
    return v.done();
  });
}

PropertyReport prop_lift_ext(const PropertyOptions& o) {
  return run_lifts("P-LIFT-EXT", o, true, false, [](const LiftDraw& d, const DoubleAlg& dbl) {
    if (!beta_hypothesis(d.module, d.beta)) return Verdict::premise_failed("beta not a balanced homomorphism");
    const BimodNov ctx = with_trivial_product(d.module);
    const BimodNov dual = dual_context(dbl.algebra);
    const Matrix minus = lift_map(dbl, d.alpha).minus_map;
    const Matrix plus = lift_map(dbl, d.beta).plus_map;
    Verdict v;
    for (const Scalar& kappa : field_values(d.alg.field())) {
      v.same("extended on V vs lifted on the double at kappa " + kappa.to_string(),
             ext_o_residual(ctx, d.alpha, d.beta, kappa_masses(kappa), Eval::FailFast).flag(),
             ext_o_residual(dual, minus, plus, kappa_masses(kappa), Eval::FailFast).flag());
      if (!v.ok()) break;
    }
    return v.done();
  });
}

PropertyReport prop_cor_gn(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(3), {2});
  require_half(s.field, "P-COR-GN");
  const Field& f = s.field;
  PropertyReport report = run_lifts("P-COR-GN", o, true, true, [](const LiftDraw& d, const DoubleAlg& dbl) {
    if (!beta_hypothesis(d.module, d.beta)) return Verdict::premise_failed("beta not a balanced homomorphism");
    const Field& f = d.alg.field();
    const BimodNov ctx = with_trivial_product(d.module);
    const Tensor2 minus = lift_map(dbl, d.alpha).minus;
    const Tensor2 plus = lift_map(dbl, d.beta).plus;
    const Algebra& big = dbl.algebra;
    Verdict v;
    for (const Scalar& kappa : field_values(f)) {
      const bool ext = ext_o_residual(ctx, d.alpha, d.beta, kappa_masses(kappa), Eval::FailFast).flag();
      const std::string at = " at kappa " + kappa.to_string();
      v.same("extended vs minus + plus tensor equation" + at,
             ext, enybe_residual(big, minus + plus, quarter_shift(kappa)).is_zero());
      v.same("extended vs minus - plus tensor equation" + at,
             ext, enybe_residual(big, minus - plus, quarter_shift(kappa)).is_zero());
      if (kappa == -Scalar::one(f)) {
        v.same("kappa -1: extended vs plain equation for minus + plus", ext,
               nybe_residual(big, minus + plus).is_zero());
        v.same("kappa -1: extended vs plain equation for minus - plus", ext,
               nybe_residual(big, minus - plus).is_zero());
      }
      if (!v.ok()) break;
    }
    v.same("weight-0 operator vs skew lifted tensor",
           o_operator_residual(ctx, d.alpha, Scalar::zero(f), Eval::FailFast).zero(),
           nybe_residual(big, minus).is_zero());
    return v.done();
  });

  // Rota-Baxter operators of nonzero weight through the double of the regular module.
  Rng rng(s.seed + 1);
  Harness h("P-COR-GN", f);
  std::vector<Algebra> algs;
  if (has_dim(s, 2)) algs = sweep_algebras(f);
  for (std::size_t t = 0; t < s.trials; ++t) algs.push_back(random_algebra(rng, f, s.dims[t % s.dims.size()]));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const Algebra& alg = algs[i];
    const std::size_t n = alg.dim();
    const Scalar lambda = rng.nonzero(f);
    std::vector<Matrix> ts = {-lambda * Matrix::identity(f, n), rng.matrix(f, n, n)};
    std::vector<Matrix> sols;
    for (const Matrix& t : all_maps(f, n, n, 81))
      if (rota_baxter_residual(alg, t, lambda, Eval::FailFast).zero()) sols.push_back(t);
    if (!sols.empty()) ts.push_back(sols[rng.next(sols.size())]);
    for (const Matrix& t : ts) {
      Inst in("Rota-Baxter case, algebra " + std::to_string(i));
      in.alg("A", alg).map("T", t).scalar("lambda", lambda);
      h.add(std::move(in), [alg, t, lambda] {
        const Field& f = alg.field();
        const DoubleAlg dbl = double_algebra(alg, Bimodule::regular(alg));
        const Tensor2 tm = lift_map(dbl, t).minus;
        const Tensor2 id = lift_map(dbl, Matrix::identity(f, alg.dim())).check;
        const Scalar two(f, 2);
        const Tensor2 base = (two / lambda) * tm;
        const bool rb = rota_baxter_residual(alg, t, lambda, Eval::FailFast).zero();
        Verdict v;
        v.same("Rota-Baxter vs plain equation for 2/lambda T- + 2 id", rb,
               nybe_residual(dbl.algebra, base + two * id).is_zero());
        v.same("Rota-Baxter vs plain equation for 2/lambda T- - 2 flip(id)", rb,
               nybe_residual(dbl.algebra, base - two * flip(id)).is_zero());
        const bool literal = nybe_residual(dbl.algebra, base + two * id).is_zero() &&
                             nybe_residual(dbl.algebra, base - two * id).is_zero();
        v.tally(literal == rb ? "reading with -2 id agrees" : "reading with -2 id differs");
        return v.done();
      });
    }
  }
  const PropertyReport extra = h.run(o.jobs);
  report.instances += extra.instances;
  report.hypotheses_met += extra.hypotheses_met;
  report.failures += extra.failures;
  for (const auto& ce : extra.counterexamples)
    if (report.counterexamples.size() < 5) report.counterexamples.push_back(ce);
  for (const auto& [name, count] : extra.tallies) report.tallies.push_back({name, count});
  report.elapsed_ms += extra.elapsed_ms;
  return report;
}

PropertyReport prop_goper(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(2), {2});
  const Field& f = s.field;
  Rng rng(s.seed);
  Harness h("P-GOPER", f);
  auto add = [&](const Algebra& alg, const Bimodule& v, const Matrix& alpha, const std::string& label) {
    Inst in(label);
    in.alg("A", alg).ctx("module", with_trivial_product(v)).map("alpha", alpha);
    h.add(std::move(in), [alg, v, alpha] {
      const DoubleAlg dbl = double_algebra(alg, v);
      Verdict v2;
      v2.same("skew lifted tensor solves the generalized equations vs generalized operator",
              gnybe_residuals(dbl.algebra, lift_map(dbl, alpha).minus).zero(), is_generalized_o(v, alpha));
      return v2.done();
    });
  };
  auto maps_for = [&](std::size_t n, std::size_t m) {
    std::vector<Matrix> every = all_maps(f, n, m, 81);
    if (every.empty()) {
      every.push_back(Matrix(f, n, m));
      for (int i = 0; i < 6; ++i) every.push_back(rng.matrix(f, n, m));
    }
    return every;
  };
  std::vector<Algebra> algs;
  if (has_dim(s, 2)) algs = sweep_algebras(f);
  for (std::size_t t = 0; t < s.trials; ++t) algs.push_back(random_algebra(rng, f, s.dims[t % s.dims.size()]));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const Algebra& alg = algs[i];
    const std::string label = "algebra " + std::to_string(i);
    for (const Matrix& a : maps_for(alg.dim(), alg.dim())) add(alg, Bimodule::regular(alg), a, label + ", regular");
    const auto lines = valid_line_bimodules(alg);
    if (!lines.empty()) {
      const Bimodule& line = lines[rng.next(lines.size())];
      for (const Matrix& a : maps_for(alg.dim(), 1)) add(alg, line, a, label + ", line");
    }
  }
  return h.run(o.jobs);
}

PropertyReport prop_goper_cor(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(3), {2});
  const Field& f = s.field;
  Rng rng(s.seed);
  Harness h("P-GOPER-COR", f);
  std::vector<Algebra> algs;
  if (has_dim(s, 2)) algs = sweep_algebras(f);
  for (std::size_t t = 0; t < s.trials; ++t) algs.push_back(random_algebra(rng, f, s.dims[t % s.dims.size()]));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const Algebra& alg = algs[i];
    const Scalar c = rng.next(2) == 0 ? Scalar::one(f) : rng.scalar(f);
    const BimodNov ctx = scaled_regular(alg, c);
    const auto space = solution_basis(f, alg.dim(), alg.dim(),
                                      both(balanced_conditions(ctx), homomorphism_conditions(ctx)));
    for (int k = 0; k < 3; ++k) {
      const OperatorInstance inst = operator_instance(rng, ctx, c, space, !f.is_rational() && alg.dim() <= 2);
      Inst in("algebra " + std::to_string(i) + " (" + inst.how + ")");
      in.ctx("context", ctx).map("alpha", inst.alpha).map("beta", inst.beta).masses(inst.masses);
      h.add(std::move(in), [ctx, inst] {
        if (!ext_o_residual(ctx, inst.alpha, inst.beta, inst.masses, Eval::FailFast).flag() ||
            !balanced_residual(ctx, inst.beta, Eval::FailFast).zero() ||
            !homomorphism_residual(ctx, inst.beta, Eval::FailFast).zero())
          return Verdict::premise_failed("not extended with a balanced homomorphism");
        const DoubleAlg dbl = double_algebra(ctx.base(), ctx.bimod);
        Verdict v;
        v.same("skew lifted tensor solves the generalized equations vs weighted conditions",
               gnybe_residuals(dbl.algebra, lift_map(dbl, inst.alpha).minus).zero(),
               goper_cor_residual(ctx, inst.alpha, inst.masses.lambda, Eval::FailFast).zero());
        return v.done();
      });
    }
  }
  return h.run(o.jobs);
}

}  // namespace nova::props
