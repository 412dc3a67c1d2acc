#include "nova/lift.hpp"

#include "nova/errors.hpp"
#include "nova/ybe.hpp"

namespace nova {

Matrix DoubleAlg::include_base() const {
  Matrix out(base.field(), n + m, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Scalar::one(base.field());
  return out;
}

Matrix DoubleAlg::project_module() const {
  Matrix out(base.field(), m, n + m);
  for (std::size_t i = 0; i < m; ++i) out.at(i, n + i) = Scalar::one(base.field());
  return out;
}

DoubleAlg double_algebra(const Algebra& alg, const Bimodule& b) {
  if (b.base != alg) throw DimMismatch("bimodule is over a different algebra");
  DoubleAlg d;
  d.base = alg;
  d.bimod = b;
  d.dual = dual_bimodule(b);
  d.algebra = semidirect(d.dual);
  d.n = alg.dim();
  d.m = b.mdim;
  d.novikov = novikov_residual(d.algebra);
  return d;
}

LiftedMap lift_map(const DoubleAlg& d, const Matrix& g) {
  if (g.rows() != d.n || g.cols() != d.m) throw DimMismatch("map must be dim(A) x dim(V)");
  LiftedMap out;
  out.source = g;
  out.map = d.include_base() * g * d.project_module();
  out.check = check_of(out.map);
  const Tensor2 f = flip(out.check);
  out.minus = out.check - f;
  out.plus = out.check + f;
  out.minus_map = out.map - out.map.transpose();
  out.plus_map = out.map + out.map.transpose();
  return out;
}

bool GnybeResiduals::first_zero() const {
  for (const auto& t : first)
    if (!t.is_zero()) return false;
  return true;
}

bool GnybeResiduals::second_zero() const {
  for (const auto& t : second)
    if (!t.is_zero()) return false;
  return true;
}

Residual GnybeResiduals::report(Eval mode) const {
  Residual res(mode);
  auto scan = [&](const std::vector<Tensor3>& ts, const char* name) {
    for (std::size_t a = 0; a < ts.size(); ++a) {
      const std::size_t n = ts[a].dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!res.check(name, {a, i, j, k}, ts[a].at(i, j, k))) return false;
    }
    return true;
  };
  if (scan(first, "gnybe-1")) scan(second, "gnybe-2");
  return res;
}

GnybeResiduals gnybe_residuals(const Algebra& alg, const Tensor2& r) {
  if (r.dim() != alg.dim()) throw DimMismatch("tensor and algebra dimensions differ");
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  const Matrix id = Matrix::identity(f, n);
  const Tensor2 tr = flip(r);
  const Tensor2 s = r + tr;
  auto comb = [&](const Tensor2& x, const Tensor2& y, Contraction c) {
    return tensor3_combine(alg, x, y, c);
  };

  // Parts that do not depend on a.
  const Tensor3 first_group = comb(tr, r, Contraction::C12_13) + comb(r, r, Contraction::C12_23) +
                              comb(r, r, Contraction::Star13_23);
  const Tensor3 flip_group = comb(r, r, Contraction::C13_12) + comb(r, r, Contraction::Star12_23);
  const Tensor3 last_group = comb(r, r, Contraction::C23_13) - comb(r, r, Contraction::C13_23) -
                             (flip_group - swap_slots(flip_group, 0, 1));
  const Tensor3 second_group = comb(r, tr, Contraction::C13_23) -
                               comb(r, r, Contraction::Star12_23) - comb(r, r, Contraction::C13_12);

  GnybeResiduals out;
  for (std::size_t a = 0; a < n; ++a) {
    const LRMatrices m = lr_matrices(alg, alg.basis(a));
    Tensor3 t = apply_slot(first_group, 0, m.left) - apply_slot(first_group, 1, m.left);
    t += comb(apply_each(s, id, m.left), r, Contraction::C12_23);
    t -= comb(apply_each(r, m.left, id), s, Contraction::C13_12);
    t += apply_slot(last_group, 2, m.left_star);
    out.first.push_back(std::move(t));

    const Tensor3 w = apply_slot(second_group, 2, m.left_star);
    out.second.push_back(w - swap_slots(w, 1, 2));
  }
  return out;
}

Tensor2 delta_r(const Algebra& alg, const Tensor2& r, const Vec& a) {
  const LRMatrices m = lr_matrices(alg, a);
  const Matrix id = Matrix::identity(alg.field(), alg.dim());
  return apply_each(r, m.left, id) + apply_each(r, id, m.left_star);
}

CircDelta circ_delta(const Algebra& alg, const Tensor2& r) {
  if (r.dim() != alg.dim()) throw DimMismatch("tensor and algebra dimensions differ");
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  const HatPair h = hat(r);
  CircDelta out{Algebra(f, n), Algebra(f, n), std::nullopt, Residual()};

  // L_star*(y) = -L_star(y)^T and R*(y) = -R(y)^T.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.closed.set_mul(a, b,
                         alg.left_star(h.hat.column(a)).transpose().column(b) +
                             alg.right(h.hat_t.column(b)).transpose().column(a));

  for (std::size_t x = 0; x < n; ++x) {
    const Tensor2 dx = delta_r(alg, r, alg.basis(x));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out.pairing.coeff(a, b, x) = dx.at(a, b);
  }

  if (f.has_half()) {
    const RTensor rt(r);
    if (is_invariant(alg, rt.sym)) {
      Algebra skew(f, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          skew.set_mul(a, b,
                       alg.left_star(rt.alpha.column(a)).transpose().column(b) -
                           alg.right(rt.alpha.column(b)).transpose().column(a));
      out.skew_form = std::move(skew);
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      out.agreement.check("closed-vs-pairing", {a, b},
                          out.closed.mul(a, b) - out.pairing.mul(a, b));
      if (out.skew_form)
        out.agreement.check("closed-vs-skew-form", {a, b},
                            out.closed.mul(a, b) - out.skew_form->mul(a, b));
    }
  return out;
}

Residual bialgebra_extra_residuals(const Algebra& alg, const Tensor2& r, Eval mode) {
  if (r.dim() != alg.dim()) throw DimMismatch("tensor and algebra dimensions differ");
  const std::size_t n = alg.dim();
  const Matrix id = Matrix::identity(alg.field(), n);
  const Tensor2 s = r + flip(r);
  std::vector<LRMatrices> m;
  for (std::size_t a = 0; a < n; ++a) m.push_back(lr_matrices(alg, alg.basis(a)));
  auto flat = [](const Tensor2& t) { return Vec(t.field(), t.entries()); };

  Residual res(mode);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Matrix ab = m[a].left * m[b].left;
      const Matrix ba = m[b].left * m[a].left;
      const Matrix l_ba = alg.left(alg.mul(b, a));
      Tensor2 e1 = apply_each(s, id, l_ba + ab) + apply_each(s, m[a].left_star, m[b].left_star);
      if (!res.check("extra-1", {a, b}, flat(e1))) return res;
      Tensor2 e2 = apply_each(s, m[a].left_star, m[b].right) -
                   apply_each(s, m[b].left_star, m[a].right) +
                   apply_each(s, m[a].right, m[b].left) - apply_each(s, m[b].right, m[a].left) +
                   apply_each(s, id, ab - ba) - apply_each(s, ab - ba, id);
      if (!res.check("extra-2", {a, b}, flat(e2))) return res;
    }
  return res;
}

Vec BAlpha::apply(const Vec& u, const Vec& v) const {
  Vec out(u.field(), values.empty() ? 0 : values.front().size());
  for (std::size_t i = 0; i < mdim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < mdim; ++j)
      if (!v[j].is_zero()) out.add_scaled(u[i] * v[j], at(i, j));
  }
  return out;
}

BAlpha b_alpha(const Bimodule& ctx, const Matrix& alpha) {
  const std::size_t n = ctx.base.dim(), m = ctx.mdim;
  if (alpha.rows() != n || alpha.cols() != m) throw DimMismatch("map must be dim(A) x mdim");
  BAlpha out;
  out.mdim = m;
  std::vector<Vec> img;
  std::vector<Matrix> l_img, r_img;
  for (std::size_t u = 0; u < m; ++u) {
    img.push_back(alpha.column(u));
    l_img.push_back(ctx.l_of(img.back()));
    r_img.push_back(ctx.r_of(img.back()));
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      out.values.push_back(ctx.base.product(img[u], img[v]) -
                           alpha.apply(l_img[u].column(v) + r_img[v].column(u)));
  return out;
}

namespace {

// The six identity families shared by the generalized operator conditions and their
// specialisation, for a bilinear map F: V x V -> A given on basis pairs.
Residual six_families(const Bimodule& ctx, const BAlpha& form, const char* const names[6],
                      Eval mode) {
  const std::size_t n = ctx.base.dim(), m = ctx.mdim;
  const Algebra& alg = ctx.base;
  const Algebra st = star(alg);
  Residual res(mode);

  std::vector<Matrix> l_form, r_form;
  for (const auto& v : form.values) {
    l_form.push_back(ctx.l_of(v));
    r_form.push_back(ctx.r_of(v));
  }
  auto lf = [&](std::size_t u, std::size_t v) -> const Matrix& { return l_form[u * m + v]; };
  auto rf = [&](std::size_t u, std::size_t v) -> const Matrix& { return r_form[u * m + v]; };

  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        if (!res.check(names[0], {u, v, w}, lf(u, v).column(w) - lf(u, w).column(v)))
          return res;
        Vec two = lf(u, v).column(w) - lf(v, u).column(w) - rf(v, w).column(u) +
                  rf(u, w).column(v);
        if (!res.check(names[1], {u, v, w}, two)) return res;
      }

  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& lx = ctx.l[x];
    const Matrix& rx = ctx.r[x];
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Vec eu = ctx.module_basis(u), ev = ctx.module_basis(v);
        const Vec lxv = lx.column(v), rxu = rx.column(u), rxv = rx.column(v);
        // Families 3 and 5 on (x, u, w = v); families 4 and 6 on (x, u, v) with w = u.
        const Vec three = st.product(alg.basis(x), form.at(u, v)) - form.apply(lxv, eu) -
                          form.apply(eu, lxv);
        if (!res.check(names[2], {x, u, v}, three)) return res;
        const Vec four = form.apply(lx.column(u), ev) - form.apply(lxv, eu);
        if (!res.check(names[3], {x, v, u}, four)) return res;
        const Vec five = form.apply(lxv, eu) + form.apply(eu, lxv) -
                         alg.product(alg.basis(x), form.at(u, v)) - form.apply(rxu, ev);
        if (!res.check(names[4], {x, u, v}, five)) return res;
        const Vec six = form.apply(rxu, ev) + form.apply(ev, rxu) - form.apply(rxv, eu) -
                        form.apply(eu, rxv);
        if (!res.check(names[5], {x, u, v}, six)) return res;
      }
  }
  return res;
}

}  // namespace

Residual generalized_o_residual(const Bimodule& ctx, const Matrix& alpha, Eval mode) {
  static const char* const names[6] = {"vcon1", "vcon2", "con3", "con4", "con5", "con6"};
  return six_families(ctx, b_alpha(ctx, alpha), names, mode);
}

Residual goper_cor_residual(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                            Eval mode) {
  const std::size_t n = ctx.dim(), m = ctx.mdim();
  if (alpha.rows() != n || alpha.cols() != m) throw DimMismatch("map must be dim(A) x mdim");
  BAlpha form;
  form.mdim = m;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      form.values.push_back(lambda * alpha.apply(ctx.product.mul(u, v)));
  static const char* const names[6] = {"cor-a1", "cor-a2", "cor-a3",
                                       "cor-a4", "cor-a5", "cor-a6"};
  return six_families(ctx.bimod, form, names, mode);
}

}  // namespace nova
