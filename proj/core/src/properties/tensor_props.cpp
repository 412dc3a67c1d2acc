// Tensor equations against operators on the dual context, quadratic algebras, and the
// coproduct-induced product on the dual space.

#include "common.hpp"

#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/ybe.hpp"

namespace nova::props {

namespace {

struct TensorDraw {
  Algebra alg;
  Tensor2 r;
  std::string label;
};

// Every tensor (small prime fields) or `per_alg` random ones for each dim-2 sweep algebra,
// then `trials` random algebras. With invariant_sym the symmetric part is always invariant.
std::vector<TensorDraw> tensor_draws(const Setup& s, bool invariant_sym, std::size_t per_alg = 8) {
  Rng rng(s.seed);
  const Field& f = s.field;
  std::vector<TensorDraw> out;
  auto tensors_for = [&](const Algebra& alg, std::size_t samples) {
    if (invariant_sym) return tensors_with_invariant_sym(rng, alg, samples);
    std::vector<Tensor2> ts = all_tensors(f, alg.dim(), samples);
    if (ts.empty()) {
      ts.push_back(Tensor2(f, alg.dim()));
      for (std::size_t i = 1; i < samples; ++i) ts.push_back(rng.tensor(f, alg.dim()));
    }
    return ts;
  };
  if (has_dim(s, 2)) {
    const Algebra a = a2(f);
    out.push_back({a, Tensor2::of(f, 2, {0, 0, 0, 1}), "A2, e2 (x) e2"});
    const auto algs = sweep_algebras(f);
    const std::size_t samples = f.is_rational() ? per_alg : std::max<std::size_t>(per_alg, 81);
    for (std::size_t i = 0; i < algs.size(); ++i) {
      const auto ts = tensors_for(algs[i], samples);
      for (std::size_t j = 0; j < ts.size(); ++j)
        out.push_back({algs[i], ts[j], "sweep #" + std::to_string(i) + " tensor " + std::to_string(j)});
    }
  }
  for (std::size_t t = 0; t < s.trials; ++t) {
    const Algebra alg = random_algebra(rng, f, s.dims[t % s.dims.size()]);
    const auto ts = tensors_for(alg, per_alg);
    for (std::size_t j = 0; j < ts.size(); ++j)
      out.push_back({alg, ts[j], "random #" + std::to_string(t) + " tensor " + std::to_string(j)});
  }
  return out;
}

template <class Check>
PropertyReport run_tensors(const std::string& id, const PropertyOptions& o, Field default_field,
                           bool invariant_sym, bool half, Check check) {
  const Setup s = resolve(o, default_field);
  if (half) require_half(s.field, id);
  Harness h(id, s.field);
  for (TensorDraw& d : tensor_draws(s, invariant_sym)) {
    Inst in(d.label);
    in.alg("A", d.alg).tensor("r", d.r);
    h.add(std::move(in), [d = std::move(d), check] { return check(d.alg, d.r); });
  }
  return h.run(o.jobs);
}

Scalar quarter_shift(const Scalar& kappa) {
  const Field& f = kappa.field();
  return (kappa + Scalar::one(f)) / Scalar(f, 4);
}

MassParams extension_masses(const Scalar& kappa) {
  const Field& f = kappa.field();
  return {Scalar::zero(f), kappa, Scalar::zero(f), Scalar::zero(f)};
}

struct QuadDraw {
  Algebra alg;
  BilForm form;
  std::string label;
};

std::optional<BilForm> find_form(Rng& rng, const Algebra& alg) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  const auto basis = solution_basis(f, n, n, invariant_form_conditions(alg));
  if (basis.empty()) return std::nullopt;
  std::vector<Matrix> cands = span_of(f, basis, n, n, 625);
  if (cands.empty())
    for (int i = 0; i < 8; ++i) cands.push_back(random_combination(rng, f, basis, n, n));
  std::vector<Matrix> good;
  for (const Matrix& g : cands)
    if (rank(g) == n) good.push_back(g);
  if (good.empty()) return std::nullopt;
  return BilForm{good[rng.next(good.size())]};
}

// A ⋉ A* with the pairing form, when A has dim <= 2.
std::optional<QuadDraw> double_with_pairing(const Algebra& alg, const std::string& label) {
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  const Algebra d = semidirect(with_trivial_product(dual_bimodule(Bimodule::regular(alg), false)));
  Matrix g(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, n + i) = Scalar::one(f);
    g.at(n + i, i) = Scalar::one(f);
  }
  const BilForm form{g};
  if (!is_novikov(d) || !is_quadratic(d, form)) return std::nullopt;
  return QuadDraw{d, form, label};
}

// Quadratic algebras: the sweep algebras carrying a nondegenerate invariant form, trivial
// algebras with the identity form, and random algebras or their doubles.
std::vector<QuadDraw> quadratic_draws(const Setup& s, Rng& rng) {
  const Field& f = s.field;
  std::vector<QuadDraw> out;
  for (std::size_t d : s.dims) out.push_back({Algebra(f, d), {Matrix::identity(f, d)}, "trivial, identity form"});
  if (has_dim(s, 2)) {
    const auto algs = sweep_algebras(f);
    for (std::size_t i = 0; i < algs.size(); ++i)
      if (auto form = find_form(rng, algs[i])) out.push_back({algs[i], *form, "sweep #" + std::to_string(i)});
  }
  for (std::size_t t = 0; t < s.trials; ++t) {
    const std::string label = "random #" + std::to_string(t);
    const std::size_t d = s.dims[t % s.dims.size()];
    if (d % 2 == 0 && rng.next(2) == 0) {
      if (auto q = double_with_pairing(random_algebra(rng, f, d / 2), label + ", double")) {
        out.push_back(*q);
        continue;
      }
    }
    const Algebra alg = random_algebra(rng, f, d);
    if (auto form = find_form(rng, alg)) out.push_back({alg, *form, label});
  }
  return out;
}

}  // namespace

PropertyReport prop_tensor_op(const PropertyOptions& o) {
  return run_tensors("P-TENSOR-OP", o, Field::prime(3), false, false,
                     [](const Algebra& alg, const Tensor2& r) {
                       Verdict v;
                       v.same("tensor equation vs operator form", nybe_residual(alg, r).is_zero(),
                              o_nybe_residual(alg, r, Eval::FailFast).zero());
                       v.require("closed and pairing products agree", circ_delta(alg, r).agreement);
                       return v.done();
                     });
}

PropertyReport prop_enybe_ext(const PropertyOptions& o) {
  return run_tensors("P-ENYBE-EXT", o, Field::prime(3), true, true,
                     [](const Algebra& alg, const Tensor2& r) {
                       const RTensor rt(r);
                       if (!is_invariant(alg, rt.sym)) return Verdict::premise_failed("symmetric part not invariant");
                       const BimodNov ctx = dual_context(alg);
                       Verdict v;
                       for (const Scalar& kappa : field_values(alg.field())) {
                         v.same("tensor equation at kappa " + kappa.to_string() + " vs extended operator",
                                enybe_residual(alg, r, quarter_shift(kappa)).is_zero(),
                                ext_o_residual(ctx, rt.alpha, rt.beta, extension_masses(kappa),
                                               Eval::FailFast).flag());
                         if (!v.ok()) break;
                       }
                       return v.done();
                     });
}

PropertyReport prop_cor_enybe(const PropertyOptions& o) {
  return run_tensors("P-COR-ENYBE", o, Field::prime(3), true, true,
                     [](const Algebra& alg, const Tensor2& r) {
                       const RTensor rt(r);
                       if (!is_invariant(alg, rt.sym)) return Verdict::premise_failed("symmetric part not invariant");
                       const TensorOperatorVerdicts t = tensor_operator_verdicts(alg, rt);
                       Verdict v;
                       const auto bit = [](bool b) { return b ? "1" : "0"; };
                       v.require("statements agree", t.agree(),
                                 std::string("nybe ") + bit(t.nybe) + ", hat " + bit(t.hat_operator) +
                                     ", -hat_t " + bit(t.minus_hat_t_operator) + ", extended " +
                                     bit(t.skew_extended) + ", star+ " + bit(t.star_plus) +
                                     ", star- " + bit(t.star_minus));
                       v.tally(t.nybe ? "all true" : "all false");
                       return v.done();
                     });
}

PropertyReport prop_skew(const PropertyOptions& o) {
  return run_tensors("P-SKEW", o, Field::prime(3), false, false,
                     [](const Algebra& alg, const Tensor2& r) {
                       if (!r.is_skew()) return Verdict::premise_failed("not skew");
                       Verdict v;
                       v.same("tensor equation vs weight-0 operator on the dual context",
                              nybe_residual(alg, r).is_zero(),
                              o_operator_residual(dual_context(alg), hat(r).hat, Scalar::zero(alg.field()),
                                                  Eval::FailFast)
                                  .zero());
                       return v.done();
                     });
}

PropertyReport prop_lem_r(const PropertyOptions& o) {
  return run_tensors("P-LEM-R", o, Field::prime(3), false, false,
                     [](const Algebra& alg, const Tensor2& r) {
                       if (!r.is_symmetric()) return Verdict::premise_failed("not symmetric");
                       const InvarianceReport rep = invariance_residual(alg, r);
                       Verdict v;
                       v.require("three forms of invariance agree", rep.consistent(),
                                 "tensor " + std::to_string(rep.tensor.zero()) + ", balanced " +
                                     std::to_string(rep.balanced.zero()) + ", homomorphism " +
                                     std::to_string(rep.homomorphism.zero()));
                       v.tally(rep.tensor.zero() ? "invariant" : "not invariant");
                       return v.done();
                     });
}

PropertyReport prop_qn(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  require_half(s.field, "P-QN");
  Rng rng(s.seed);
  Harness h("P-QN", s.field);
  for (const QuadDraw& q : quadratic_draws(s, rng)) {
    const auto ts = tensors_with_invariant_sym(rng, q.alg, 125);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      Inst in(q.label + " tensor " + std::to_string(j));
      in.alg("A", q.alg).map("form", q.form.grid).tensor("r", ts[j]);
      h.add(std::move(in), [q, r = ts[j]] {
        const RTensor rt(r);
        if (!is_invariant(q.alg, rt.sym)) return Verdict::premise_failed("symmetric part not invariant");
        const Matrix alpha_bar = rt.alpha * q.form.grid;
        const Matrix beta_bar = rt.beta * q.form.grid;
        const BimodNov ctx = regular(q.alg, false);
        Verdict v;
        for (const Scalar& kappa : field_values(q.alg.field())) {
          v.same("tensor equation at kappa " + kappa.to_string() + " vs extended operator on A",
                 enybe_residual(q.alg, r, quarter_shift(kappa)).is_zero(),
                 ext_o_residual(ctx, alpha_bar, beta_bar, extension_masses(kappa), Eval::FailFast).flag());
          if (!v.ok()) break;
        }
        if (r.is_skew())
          v.same("skew: tensor equation vs weight-0 Rota-Baxter", nybe_residual(q.alg, r).is_zero(),
                 rota_baxter_residual(q.alg, alpha_bar, Scalar::zero(q.alg.field()), Eval::FailFast).zero());
        return v.done();
      });
    }
  }
  return h.run(o.jobs);
}

PropertyReport prop_dual_exo(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(5));
  require_half(s.field, "P-DUAL-EXO");
  const Field& f = s.field;
  Rng rng(s.seed);
  Harness h("P-DUAL-EXO", f);
  for (const QuadDraw& q : quadratic_draws(s, rng)) {
    const std::size_t n = q.alg.dim();
    const BimodNov reg = regular(q.alg, false);
    const auto betas = solution_basis(
        f, n, n, both(both(balanced_conditions(reg), homomorphism_conditions(reg)), adjoint_conditions(q.form.grid, 1)));
    const auto skews = solution_basis(f, n, n, adjoint_conditions(q.form.grid, -1));
    std::vector<Matrix> ts = span_of(f, skews, n, n, 125);
    if (ts.empty())
      for (int i = 0; i < 8; ++i) ts.push_back(random_combination(rng, f, skews, n, n));
    for (int i = 0; i < 4; ++i) ts.push_back(rng.matrix(f, n, n));
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const Matrix beta = random_combination(rng, f, betas, n, n);
      Inst in(q.label + " map " + std::to_string(j));
      in.alg("A", q.alg).map("form", q.form.grid).map("T", ts[j]).map("beta", beta);
      h.add(std::move(in), [q, t = ts[j], beta, reg] {
        const Field& f = q.alg.field();
        if (!is_quadratic(q.alg, q.form) || !balanced_residual(reg, beta, Eval::FailFast).zero() ||
            !homomorphism_residual(reg, beta, Eval::FailFast).zero() ||
            !adjoint_residual(q.form, beta, 1, Eval::FailFast).zero())
          return Verdict::premise_failed("beta not a self-adjoint balanced homomorphism");
        const QuadTransport qt = quad_transport(q.alg, q.form, t, beta);
        const BimodNov dual = dual_context(q.alg);
        const bool skew_adjoint = adjoint_residual(q.form, t, -1, Eval::FailFast).zero();
        Verdict v;
        for (const Scalar& kappa : field_values(f)) {
          const std::string at = " at kappa " + kappa.to_string();
          const bool on_a = ext_o_residual(reg, t, beta, extension_masses(kappa), Eval::FailFast).flag();
          v.same("extended on A vs on the dual" + at, on_a,
                 ext_o_residual(dual, qt.p_t, qt.p_beta, extension_masses(kappa), Eval::FailFast).flag());
          if (skew_adjoint) {
            v.same("delta+ tensor equation" + at, enybe_residual(q.alg, qt.delta_plus, quarter_shift(kappa)).is_zero(), on_a);
            v.same("delta- tensor equation" + at, enybe_residual(q.alg, qt.delta_minus, quarter_shift(kappa)).is_zero(), on_a);
          }
          if (!v.ok()) break;
        }
        if (skew_adjoint) {
          // Literal kappa = 0 reading: plain tensor equation against weight-0 Rota-Baxter.
          const bool rb = rota_baxter_residual(q.alg, t, Scalar::zero(f), Eval::FailFast).zero();
          const bool agree = nybe_residual(q.alg, qt.delta_plus).is_zero() == rb &&
                             nybe_residual(q.alg, qt.delta_minus).is_zero() == rb;
          v.tally(agree ? "kappa 0 plain-equation reading agrees" : "kappa 0 plain-equation reading differs");
          v.tally("skew-adjoint");
        }
        return v.done();
      });
    }
  }
  return h.run(o.jobs);
}

PropertyReport prop_circ_delta(const PropertyOptions& o) {
  const Setup s = resolve(o, Field::prime(3));
  Harness h("P-CIRC-DELTA", s.field);
  if (has_dim(s, 2)) {
    Inst in("A2, e2 (x) e2 worked value");
    const Field f = s.field;
    in.alg("A", a2(f)).tensor("r", Tensor2::of(f, 2, {0, 0, 0, 1}));
    h.add(std::move(in), [f] {
      const CircDelta c = circ_delta(a2(f), Tensor2::of(f, 2, {0, 0, 0, 1}));
      Verdict v;
      v.require("agreement", c.agreement);
      v.require("e2* o e2* = 3 e1*", c.closed.mul(1, 1) == Vec::of(f, {3, 0}), c.closed.mul(1, 1).to_string());
      return v.done();
    });
  }
  for (TensorDraw& d : tensor_draws(s, false)) {
    Inst in(d.label);
    in.alg("A", d.alg).tensor("r", d.r);
    h.add(std::move(in), [d = std::move(d)] {
      Verdict v;
      v.require("closed and pairing products agree", circ_delta(d.alg, d.r).agreement);
      return v.done();
    });
  }
  return h.run(o.jobs);
}

PropertyReport prop_gnybe_prod(const PropertyOptions& o) {
  return run_tensors("P-GNYBE-PROD", o, Field::prime(3), false, false,
                     [](const Algebra& alg, const Tensor2& r) {
                       if (!r.is_skew()) return Verdict::premise_failed("not skew");
                       Verdict v;
                       v.same("generalized equations vs Novikov dual product",
                              gnybe_residuals(alg, r).zero(), is_novikov(circ_delta(alg, r).closed));
                       return v.done();
                     });
}

PropertyReport prop_gnybe_ext(const PropertyOptions& o) {
  return run_tensors("P-GNYBE-EXT", o, Field::prime(3), true, true,
                     [](const Algebra& alg, const Tensor2& r) {
                       const RTensor rt(r);
                       if (!is_invariant(alg, rt.sym)) return Verdict::premise_failed("symmetric part not invariant");
                       const BimodNov ctx = dual_context(alg);
                       bool extended = false, solves = false;
                       for (const Scalar& kappa : field_values(alg.field())) {
                         extended = extended || ext_o_residual(ctx, rt.alpha, rt.beta, extension_masses(kappa),
                                                               Eval::FailFast).flag();
                         solves = solves || enybe_residual(alg, r, quarter_shift(kappa)).is_zero();
                       }
                       if (!extended && !solves) return Verdict::premise_failed("not extended for any tested kappa");
                       Verdict v;
                       const GnybeResiduals g = gnybe_residuals(alg, r);
                       if (extended) v.require("extended operator solves the generalized equations", g.zero());
                       if (solves) v.require("tensor equation solution solves the generalized equations", g.zero());
                       v.tally("extended");
                       return v.done();
                     });
}

}  // namespace nova::props
