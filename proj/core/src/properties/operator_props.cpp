// Semidirect products, dual bimodules and the extended-operator theorems.

#include "common.hpp"

#include "nova/errors.hpp"

namespace nova::props {

namespace {

// mdim-1 bimodule with l(e_i) = (ls[i]), r(e_i) = (rs[i]).
Bimodule line_bimodule(const Algebra& a, const std::vector<Scalar>& ls,
                       const std::vector<Scalar>& rs) {
  Bimodule b = Bimodule::zero(a, 1);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    b.l[i].at(0, 0) = ls[i];
    b.r[i].at(0, 0) = rs[i];
  }
  return b;
}

Algebra line_product(const Field& f, const Scalar& c) {
  Algebra m(f, 1);
  m.coeff(0, 0, 0) = c;
  return m;
}

// Every mdim-1 action pair of a over a prime field.
std::vector<Bimodule> all_line_bimodules(const Algebra& a) {
  std::vector<Bimodule> out;
  const Field& f = a.field();
  for (const Matrix& m : all_maps(f, 2, a.dim(), 1u << 16)) {
    std::vector<Scalar> ls, rs;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      ls.push_back(m.at(0, i));
      rs.push_back(m.at(1, i));
    }
    out.push_back(line_bimodule(a, ls, rs));
  }
  return out;
}

// Every line module when the whole sweep stays small, otherwise the zero one and a few
// random action pairs.
std::vector<Bimodule> sweep_line_bimodules(Rng& rng, const Algebra& a, std::size_t sweep_size) {
  const Field& f = a.field();
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < 2 * a.dim() + 1; ++i) per *= f.p();
  if (sweep_size * per <= 100000) return all_line_bimodules(a);
  std::vector<Bimodule> out = {Bimodule::zero(a, 1)};
  for (int k = 0; k < 3; ++k) {
    std::vector<Scalar> ls, rs;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      ls.push_back(rng.scalar(f));
      rs.push_back(rng.scalar(f));
    }
    out.push_back(line_bimodule(a, ls, rs));
  }
  return out;
}

// A bimodule over a random algebra: valid ones (regular, dual of regular, zero) and random
// actions that usually are not.
Bimodule random_bimodule(Rng& rng, const Algebra& a) {
  const Field& f = a.field();
  switch (rng.next(4)) {
    case 0:
      return Bimodule::regular(a);
    case 1:
      return dual_bimodule(Bimodule::regular(a), false);
    case 2:
      return Bimodule::zero(a, 1 + rng.next(2));
    default: {
      const std::size_t m = 1 + rng.next(2);
      Bimodule b = Bimodule::zero(a, m);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        b.l[i] = rng.matrix(f, m, m);
        b.r[i] = rng.matrix(f, m, m);
      }
      return b;
    }
  }
}

Outcome semi_case(const BimodNov& b) {
  Verdict v;
  v.same("module identities vs semidirect Novikov", bimodnov_residual(b, Eval::FailFast).zero(),
         is_novikov(semidirect(b)));
  return v.done();
}

Outcome dual_case(const Bimodule& b) {
  if (!bimodule_residual(b, Eval::FailFast).zero()) return Verdict::premise_failed("not a bimodule");
  Verdict v;
  const Bimodule d = dual_bimodule(b, false);
  v.require("dual is a bimodule", bimodule_residual(d));
  const Bimodule dd = dual_bimodule(d, false);
  v.require("double dual equals the module", dd.l == b.l && dd.r == b.r);
  v.tally("bimodule");
  return v.done();
}

// Context choices for the operator theorems: module product c times that of A.
Scalar context_scale(Rng& rng, const Field& f) {
  switch (rng.next(3)) {
    case 0:
      return Scalar::one(f);
    case 1:
      return Scalar::zero(f);
    default:
      return rng.nonzero(f);
  }
}

struct OperatorDraw {
  Algebra alg;
  BimodNov ctx;
  OperatorInstance inst;
  std::string label;
};

// One operator instance per enumerated algebra (regular context), then `trials` random ones
// over the requested dimensions.
std::vector<OperatorDraw> operator_draws(const Setup& s, bool balanced, bool unit_kappa) {
  Rng rng(s.seed);
  std::vector<OperatorDraw> out;
  auto draw = [&](const Algebra& alg, const Scalar& c, const std::string& label) {
    const BimodNov ctx = scaled_regular(alg, c);
    LinearFn cond = homomorphism_conditions(ctx);
    if (balanced) cond = both(cond, balanced_conditions(ctx));
    const auto space = solution_basis(alg.field(), alg.dim(), alg.dim(), cond);
    const bool search = !alg.field().is_rational() && alg.dim() <= 2;
    out.push_back({alg, ctx, operator_instance(rng, ctx, c, space, search, unit_kappa), label});
  };
  if (has_dim(s, 2)) {
    const auto algs = sweep_algebras(s.field);
    for (std::size_t i = 0; i < algs.size(); ++i)
      draw(algs[i], Scalar::one(s.field), "enumerated #" + std::to_string(i));
  }
  for (std::size_t t = 0; t < s.trials; ++t) {
    const std::size_t dim = s.dims[t % s.dims.size()];
    const Algebra alg = random_algebra(rng, s.field, dim);
    draw(alg, context_scale(rng, s.field), "random #" + std::to_string(t));
  }
  return out;
}

Inst draw_inst(const OperatorDraw& d) {
  Inst in(d.label + " (" + d.inst.how + ")");
  in.ctx("context", d.ctx).map("alpha", d.inst.alpha).map("beta", d.inst.beta).masses(d.inst.masses);
  return in;
}

Outcome ext_star_case(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                      const MassParams& p) {
  if (!ext_o_residual(ctx, alpha, beta, p, Eval::FailFast).flag())
    return Verdict::premise_failed("not extended");
  Verdict v;
  v.require("product conditions", star_conditions(ctx, alpha, p.lambda));
  v.require("star product is Novikov", novikov_residual(star_product(ctx, alpha, p.lambda)));
  v.tally("extended");
  return v.done();
}

Outcome delta_pm_case(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                      const Scalar& lambda) {
  if (!homomorphism_residual(ctx, beta, Eval::FailFast).zero())
    return Verdict::premise_failed("beta not a homomorphism");
  const Field& f = ctx.field();
  const Algebra st = star_product(ctx, alpha, lambda);
  Verdict v;
  for (int sign : {1, -1}) {
    const Scalar mu = sign > 0 ? lambda : -lambda;
    const MassParams p{lambda, -Scalar::one(f), mu, Scalar::zero(f)};
    const bool eq = ext_o_equation(ctx, alpha, beta, p, Eval::FailFast).zero();
    const Matrix delta = sign > 0 ? alpha + beta : alpha - beta;
    const bool hom = homomorphism_identity(st, ctx.base(), delta, Eval::FailFast).zero();
    v.same(sign > 0 ? "mass (-1, lambda) vs alpha+beta" : "mass (-1, -lambda) vs alpha-beta", eq, hom);
  }
  return v.done();
}

Outcome r_pm_case(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                  const Scalar& lambda) {
  const bool premise = balanced_residual(ctx, beta, Eval::FailFast).zero() &&
                       homomorphism_residual(ctx, beta, Eval::FailFast).zero() &&
                       equivalent_residual(ctx, beta, lambda, Eval::FailFast).zero();
  if (!premise) return Verdict::premise_failed("beta hypotheses fail");
  const Field& f = ctx.field();
  const auto [plus, minus] = pm_products(ctx, beta, lambda);
  Verdict v;
  v.require("plus product gives a bimodule Novikov algebra", bimodnov_residual({ctx.bimod, plus}));
  v.require("minus product gives a bimodule Novikov algebra", bimodnov_residual({ctx.bimod, minus}));
  for (int sign : {1, -1}) {
    const MassParams p{lambda, -Scalar::one(f), sign > 0 ? lambda : -lambda, Scalar::zero(f)};
    const bool ext = ext_o_residual(ctx, alpha, beta, p, Eval::FailFast).flag();
    const BimodNov pm{ctx.bimod, sign > 0 ? plus : minus};
    const Matrix delta = sign > 0 ? alpha + beta : alpha - beta;
    const bool op = o_operator_residual(pm, delta, Scalar::one(f), Eval::FailFast).zero();
    v.same(sign > 0 ? "extended (-1, lambda) vs weight-1 operator on M+"
                    : "extended (-1, -lambda) vs weight-1 operator on M-",
           ext, op);
  }
  return v.done();
}

}  // namespace

PropertyReport prop_semi(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(2), {2, 3});
  Harness h("P-SEMI", s.field);
  const Field& f = s.field;

  const Algebra a = a2(f);
  h.add(Inst("worked example: A2 regular").alg("A", a), [a] { return semi_case(regular(a)); });
  h.add(Inst("worked example: A2 dual module, zero product").alg("A", a), [a] {
    return semi_case(with_trivial_product(dual_bimodule(Bimodule::regular(a))));
  });

  if (!f.is_rational() && has_dim(s, 2)) {
    const auto algs = sweep_algebras(f);
    Rng pick(s.seed + 1);
    for (std::size_t i = 0; i < algs.size(); ++i)
      for (const Bimodule& b : sweep_line_bimodules(pick, algs[i], algs.size()))
        for (const Scalar& c : field_values(f)) {
          const BimodNov bn{b, line_product(f, c)};
          h.add(Inst("enumerated #" + std::to_string(i) + ", line module").ctx("M", bn),
                [bn] { return semi_case(bn); });
        }
  }

  Rng rng(s.seed);
  for (std::size_t t = 0; t < s.trials; ++t) {
    const Algebra alg = random_algebra(rng, f, s.dims[t % s.dims.size()]);
    const Bimodule b = random_bimodule(rng, alg);
    Algebra prod(f, b.mdim);
    if (b.mdim == alg.dim() && rng.next(2) == 0) prod = scaled(alg, rng.scalar(f));
    else if (rng.next(2) == 0) prod = scaled(random_algebra(rng, f, b.mdim), Scalar::one(f));
    const BimodNov bn{b, prod};
    h.add(Inst("random #" + std::to_string(t)).ctx("M", bn), [bn] { return semi_case(bn); });
  }
  return h.run(o.jobs);
}

PropertyReport prop_dual(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(2), {2, 3});
  Harness h("P-DUAL", s.field);
  const Field& f = s.field;
  const Bimodule reg = Bimodule::regular(a2(f));
  h.add(Inst("worked example: A2 regular").ctx("M", with_trivial_product(reg)), [reg] { return dual_case(reg); });

  if (!f.is_rational() && has_dim(s, 2)) {
    const auto algs = sweep_algebras(f);
    Rng pick(s.seed + 1);
    for (std::size_t i = 0; i < algs.size(); ++i) {
      const Bimodule r = Bimodule::regular(algs[i]);
      h.add(Inst("enumerated #" + std::to_string(i) + ", regular").ctx("M", with_trivial_product(r)),
            [r] { return dual_case(r); });
      for (const Bimodule& b : sweep_line_bimodules(pick, algs[i], algs.size()))
        h.add(Inst("enumerated #" + std::to_string(i) + ", line module")
                  .ctx("M", with_trivial_product(b)),
              [b] { return dual_case(b); });
    }
  }

  Rng rng(s.seed);
  for (std::size_t t = 0; t < s.trials; ++t) {
    const Algebra alg = random_algebra(rng, f, s.dims[t % s.dims.size()]);
    const Bimodule b = random_bimodule(rng, alg);
    h.add(Inst("random #" + std::to_string(t)).ctx("M", with_trivial_product(b)),
          [b] { return dual_case(b); });
  }
  return h.run(o.jobs);
}

PropertyReport prop_ext_star(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  Harness h("P-EXT-STAR", s.field);
  const Field& f = s.field;
  {
    const BimodNov ctx = regular(a2(f), false);
    const Matrix alpha = t2(f), beta = beta2(f);
    const MassParams p = MassParams::of(f, 1, -2, 0);
    h.add(Inst("worked example: A2, T2, beta2").ctx("context", ctx).map("alpha", alpha).map("beta", beta).masses(p),
          [=] { return ext_star_case(ctx, alpha, beta, p); });
  }
  for (const OperatorDraw& d : operator_draws(s, true, false))
    h.add(draw_inst(d), [d] { return ext_star_case(d.ctx, d.inst.alpha, d.inst.beta, d.inst.masses); });
  return h.run(o.jobs);
}

PropertyReport prop_delta_pm(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  Harness h("P-DELTA-PM", s.field);
  const Field& f = s.field;
  {
    const BimodNov ctx = regular(a2(f), false);
    const Matrix alpha = t2(f), beta = beta2(f);
    const Scalar lambda = Scalar::one(f);
    h.add(Inst("worked example: A2, T2, beta2").ctx("context", ctx).map("alpha", alpha).map("beta", beta).scalar("lambda", lambda),
          [=] { return delta_pm_case(ctx, alpha, beta, lambda); });
  }
  for (const OperatorDraw& d : operator_draws(s, false, true))
    h.add(draw_inst(d), [d] { return delta_pm_case(d.ctx, d.inst.alpha, d.inst.beta, d.inst.masses.lambda); });
  return h.run(o.jobs);
}

PropertyReport prop_r_pm(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  require_half(s.field, "P-R-PM");
  Harness h("P-R-PM", s.field);
  const Field& f = s.field;
  {
    const BimodNov ctx = regular(a2(f), false);
    const Matrix alpha = t2(f), beta = beta2(f);
    const Scalar lambda = Scalar::one(f);
    h.add(Inst("worked example: A2, T2, beta2").ctx("context", ctx).map("alpha", alpha).map("beta", beta).scalar("lambda", lambda),
          [=] { return r_pm_case(ctx, alpha, beta, lambda); });
  }
  for (const OperatorDraw& d : operator_draws(s, true, true))
    h.add(draw_inst(d), [d] { return r_pm_case(d.ctx, d.inst.alpha, d.inst.beta, d.inst.masses.lambda); });
  return h.run(o.jobs);
}

namespace {

// Both signs of: T satisfies the identity-extension equation at khat = -1 +- lambda iff
// T +- id is Rota-Baxter of weight lambda -+ 2.
void cor_bax_check(Verdict& v, const Algebra& alg, const Matrix& t, const Scalar& lambda) {
  const Field& f = alg.field();
  const Matrix id = Matrix::identity(f, alg.dim());
  for (int sign : {1, -1}) {
    const Scalar sg(f, sign);
    const bool eq =
        identity_extension_residual(alg, t, lambda, sg * lambda - Scalar::one(f), Eval::FailFast).zero();
    const bool rb =
        rota_baxter_residual(alg, t + sg * id, lambda - Scalar(f, 2) * sg, Eval::FailFast).zero();
    v.same(sign > 0 ? "khat = -1 + lambda vs T + id" : "khat = -1 - lambda vs T - id", eq, rb);
  }
}

// Maps that land on the positive side: T = S -+ id with S = 0 or S = -(weight) id.
std::vector<Matrix> cor_bax_positives(const Field& f, std::size_t n, const Scalar& lambda) {
  const Matrix id = Matrix::identity(f, n);
  std::vector<Matrix> out;
  for (int sign : {1, -1}) {
    const Scalar sg(f, sign);
    const Scalar weight = lambda - Scalar(f, 2) * sg;
    out.push_back(-sg * id);
    out.push_back(-(weight + sg) * id);
  }
  return out;
}

}  // namespace

PropertyReport prop_cor_bax(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  Harness h("P-COR-BAX", s.field);
  const Field& f = s.field;
  const std::vector<long long> weights = {0, 1, 2};
  Rng rng(s.seed);

  auto add_batch = [&](const Algebra& alg, const Scalar& lambda, std::vector<Matrix> ts,
                       const std::string& label) {
    h.add(Inst(label).alg("A", alg).scalar("lambda", lambda), [alg, lambda, ts] {
      Verdict v;
      for (const Matrix& t : ts) {
        cor_bax_check(v, alg, t, lambda);
        if (!v.ok()) {
          v.note("T", t);
          break;
        }
      }
      return v.done();
    });
  };
  for (long long w : weights) {
    const Scalar lambda(f, w);
    auto ts = cor_bax_positives(f, 2, lambda);
    ts.push_back(t2(f));
    add_batch(a2(f), lambda, ts, "worked example: A2, weight " + std::to_string(w));
  }
  // `trials` random endomorphisms per enumerated algebra and weight.
  if (has_dim(s, 2))
    for (const Algebra& alg : sweep_algebras(f)) {
      const std::size_t idx = h.size();
      for (long long w : weights) {
        const Scalar lambda(f, w);
        std::vector<Matrix> ts = cor_bax_positives(f, 2, lambda);
        for (std::size_t t = 0; t < s.trials; ++t) ts.push_back(rng.matrix(f, 2, 2));
        add_batch(alg, lambda, std::move(ts),
                  "enumerated case " + std::to_string(idx) + ", weight " + std::to_string(w));
      }
    }
  for (std::size_t d : s.dims) {
    if (d == 2 && !f.is_rational()) continue;
    for (long long w : weights) {
      const Scalar lambda(f, w);
      const Algebra alg = random_algebra(rng, f, d);
      std::vector<Matrix> ts = cor_bax_positives(f, d, lambda);
      for (std::size_t t = 0; t < s.trials; ++t) ts.push_back(rng.matrix(f, d, d));
      add_batch(alg, lambda, std::move(ts), "random dim " + std::to_string(d) + ", weight " + std::to_string(w));
    }
  }
  return h.run(o.jobs);
}

namespace {

void baxter_check(Verdict& v, const Algebra& alg, const Matrix& t) {
  const Field& f = alg.field();
  const Matrix id = Matrix::identity(f, alg.dim());
  const bool bax = identity_extension_residual(alg, t, Scalar::zero(f), -Scalar::one(f), Eval::FailFast).zero();
  const bool plus = rota_baxter_residual(alg, t + id, Scalar(f, -2), Eval::FailFast).zero();
  const bool minus = rota_baxter_residual(alg, t - id, Scalar(f, 2), Eval::FailFast).zero();
  v.same("Baxter vs T + id of weight -2", bax, plus);
  v.same("Baxter vs T - id of weight 2", bax, minus);
  if (bax && f.has_half()) {
    const Scalar half = Scalar::one(f) / Scalar(f, 2);
    v.require("post-Novikov from (T + id)/(-2)",
              post_residual(post_from_rb(alg, -half * (t + id), Scalar::one(f)), Eval::FailFast));
    v.require("post-Novikov from (T - id)/2",
              post_residual(post_from_rb(alg, half * (t - id), Scalar::one(f)), Eval::FailFast));
  }
}

}  // namespace

PropertyReport prop_baxter(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(3));
  Harness h("P-BAXTER", s.field);
  const Field& f = s.field;
  Rng rng(s.seed);
  auto add_batch = [&](const Algebra& alg, std::vector<Matrix> ts, const std::string& label) {
    h.add(Inst(label).alg("A", alg), [alg, ts] {
      Verdict v;
      for (const Matrix& t : ts) {
        baxter_check(v, alg, t);
        if (!v.ok()) {
          v.note("T", t);
          break;
        }
      }
      return v.done();
    });
  };
  auto signed_ids = [&](std::size_t n) {
    const Matrix id = Matrix::identity(f, n);
    return std::vector<Matrix>{id, -id};
  };
  {
    auto ts = signed_ids(2);
    ts.push_back(t2(f));
    add_batch(a2(f), ts, "worked example: A2");
  }
  if (has_dim(s, 2)) {
    const auto algs = sweep_algebras(f);
    for (std::size_t i = 0; i < algs.size(); ++i) {
      std::vector<Matrix> ts = all_maps(f, 2, 2, 81);
      if (ts.empty()) {
        ts = signed_ids(2);
        for (std::size_t t = 0; t < s.trials; ++t) ts.push_back(rng.matrix(f, 2, 2));
      }
      add_batch(algs[i], std::move(ts), "enumerated #" + std::to_string(i));
    }
  }
  for (std::size_t t = 0; t < s.trials; ++t) {
    const std::size_t d = s.dims[t % s.dims.size()];
    const Algebra alg = random_algebra(rng, f, d);
    std::vector<Matrix> ts = signed_ids(d);
    ts.push_back(rng.matrix(f, d, d));
    add_batch(alg, std::move(ts), "random #" + std::to_string(t));
  }
  return h.run(o.jobs);
}

namespace {

Outcome cons_case(const Algebra& alg, const Matrix& t, const Matrix& beta, const MassParams& p) {
  const Field& f = alg.field();
  const BimodNov ctx = regular(alg, false);
  Verdict v;
  const bool beta_ok = balanced_residual(ctx, beta, Eval::FailFast).zero() &&
                       homomorphism_residual(ctx, beta, Eval::FailFast).zero();
  // With beta a balanced homomorphism, mass (-1, +-lambda) matches T +- beta being
  // weight-1 operators on (A, o+-).
  if (beta_ok && f.has_half()) {
    const auto [plus, minus] = pm_products(ctx, beta, p.lambda);
    for (int sign : {1, -1}) {
      const MassParams q{p.lambda, -Scalar::one(f), sign > 0 ? p.lambda : -p.lambda, Scalar::zero(f)};
      const bool ext = ext_o_residual(ctx, t, beta, q, Eval::FailFast).flag();
      const bool op = o_operator_residual({ctx.bimod, sign > 0 ? plus : minus},
                                          sign > 0 ? t + beta : t - beta, Scalar::one(f),
                                          Eval::FailFast).zero();
      v.same(sign > 0 ? "mass (-1, lambda) vs T + beta" : "mass (-1, -lambda) vs T - beta", ext, op);
      const MassParams unshifted{p.lambda, -Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
      const bool literal = ext_o_residual(ctx, t, beta, unshifted, Eval::FailFast).flag() == op;
      v.tally(literal ? "mass (-1, 0) reading agrees" : "mass (-1, 0) reading differs");
    }
  }
  const MassParams q{p.lambda, p.kappa, Scalar::zero(f), Scalar::zero(f)};
  if (!ext_o_residual(ctx, t, beta, q, Eval::FailFast).flag()) {
    Outcome out = v.done();
    out.premise = false;
    out.tallies.push_back("not extended");
    return out;
  }
  v.tally("extended");
  v.require("o_T is Novikov", novikov_residual(circ_T(alg, t, p.lambda)));
  if (!p.kappa.is_zero() && f.has_half()) {
    const auto [plus, minus] = pm_products(ctx, beta, p.lambda);
    v.require("(A, o+) is a bimodule Novikov algebra", bimodnov_residual({ctx.bimod, plus}));
    v.require("(A, o-) is a bimodule Novikov algebra", bimodnov_residual({ctx.bimod, minus}));
  }
  return v.done();
}

}  // namespace

PropertyReport prop_cons(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  Harness h("P-CONS", s.field);
  const Field& f = s.field;
  Rng rng(s.seed);
  {
    const Algebra a = a2(f);
    const Matrix t = t2(f), beta = beta2(f);
    const MassParams p = MassParams::of(f, 1, -2, 0);
    h.add(Inst("worked example: A2, T2, beta2").alg("A", a).map("T", t).map("beta", beta).masses(p),
          [=] { return cons_case(a, t, beta, p); });
  }
  auto draw = [&](const Algebra& alg, const std::string& label) {
    const std::size_t n = alg.dim();
    const BimodNov ctx = regular(alg, false);
    const auto space = solution_basis(
        f, n, n, both(balanced_conditions(ctx), homomorphism_conditions(ctx)));
    const Matrix beta = random_combination(rng, f, space, n, n);
    Scalar lambda = rng.scalar(f), kappa = rng.scalar(f);
    Matrix t = rng.matrix(f, n, n);
    std::string how = "random";
    switch (rng.next(4)) {
      case 0:  // b beta at weight 0, kappa = -b^2
        {
          const Scalar b = rng.scalar(f);
          lambda = Scalar::zero(f);
          kappa = -(b * b);
          t = b * beta;
          how = "b beta";
        }
        break;
      case 1:  // -lambda id with kappa = 0
        kappa = Scalar::zero(f);
        t = -lambda * Matrix::identity(f, n);
        how = "-lambda id";
        break;
      case 2: {
        const MassParams p{lambda, kappa, Scalar::zero(f), Scalar::zero(f)};
        std::vector<Matrix> sols;
        for (const Matrix& m : all_maps(f, n, n, 2401))
          if (ext_o_equation(ctx, m, beta, p, Eval::FailFast).zero()) sols.push_back(m);
        if (!sols.empty()) {
          t = sols[rng.next(sols.size())];
          how = "searched";
        }
        break;
      }
      default:
        break;
    }
    const MassParams p{lambda, kappa, Scalar::zero(f), Scalar::zero(f)};
    h.add(Inst(label + " (" + how + ")").alg("A", alg).map("T", t).map("beta", beta).masses(p),
          [=] { return cons_case(alg, t, beta, p); });
  };
  if (has_dim(s, 2)) {
    const auto algs = sweep_algebras(f);
    for (std::size_t i = 0; i < algs.size(); ++i) draw(algs[i], "enumerated #" + std::to_string(i));
  }
  for (std::size_t t = 0; t < s.trials; ++t)
    draw(random_algebra(rng, f, s.dims[t % s.dims.size()]), "random #" + std::to_string(t));
  return h.run(o.jobs);
}

}  // namespace nova::props
