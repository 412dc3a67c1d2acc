#include "nova/ybe.hpp"

#include "nova/errors.hpp"

namespace nova {

HatPair hat(const Tensor2& r) {
  Matrix g = r.grid();
  return {g.transpose(), g};
}

Tensor2 check_of(const Matrix& p) { return Tensor2::from_grid(p.transpose()); }

namespace {

Scalar half(const Field& f, const char* what) {
  if (!f.has_half()) throw NoHalf(std::string(what) + " needs 1/2");
  return Scalar(f, 2).inverse();
}

}  // namespace

RTensor::RTensor(const Tensor2& t) : r(t) {
  const Scalar h = half(t.field(), "symmetric and skew parts");
  Tensor2 f = flip(t);
  skew = h * (t - f);
  sym = h * (t + f);
  HatPair hp = nova::hat(t);
  hat = hp.hat;
  hat_t = hp.hat_t;
  alpha = nova::hat(skew).hat;
  beta = nova::hat(sym).hat;
}

BimodNov dual_context(const Algebra& alg) {
  return with_trivial_product(dual_bimodule(Bimodule::regular(alg), false));
}

namespace {

Vec flatten(const Tensor2& t) { return Vec(t.field(), t.entries()); }

}  // namespace

InvarianceReport invariance_residual(const Algebra& alg, const Tensor2& s, Eval mode) {
  if (s.dim() != alg.dim()) throw DimMismatch("tensor and algebra dimensions differ");
  InvarianceReport rep;
  rep.symmetric = s.is_symmetric();
  rep.tensor = Residual(mode);
  const Matrix id = Matrix::identity(alg.field(), alg.dim());
  for (std::size_t x = 0; x < alg.dim(); ++x) {
    LRMatrices m = lr_matrices(alg, alg.basis(x));
    Tensor2 v = apply_each(s, m.left, id) + apply_each(s, id, m.left_star);
    if (!rep.tensor.check("invariance", {x}, flatten(v))) break;
  }
  const BimodNov ctx = dual_context(alg);
  const Matrix sh = hat(s).hat;
  rep.balanced = balanced_residual(ctx, sh, mode);
  rep.homomorphism = homomorphism_residual(ctx, sh, mode);
  return rep;
}

Tensor3 nybe_residual(const Algebra& alg, const Tensor2& r) {
  return tensor3_combine(alg, r, r, Contraction::C13_23) +
         tensor3_combine(alg, r, r, Contraction::Star12_23) +
         tensor3_combine(alg, r, r, Contraction::C13_12);
}

Tensor3 enybe_residual(const Algebra& alg, const Tensor2& r, const Scalar& epsilon) {
  Tensor3 out = nybe_residual(alg, r);
  if (epsilon.is_zero()) return out;
  Tensor2 s = r + flip(r);
  return out - epsilon * tensor3_combine(alg, s, s, Contraction::C13_23);
}

Residual tensor_report(const Tensor3& t, const char* name, Eval mode) {
  Residual res(mode);
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!res.check(name, {i, j, k}, t.at(i, j, k))) return res;
  return res;
}

Residual o_nybe_residual(const Algebra& alg, const Tensor2& r, Eval mode) {
  if (r.dim() != alg.dim()) throw DimMismatch("tensor and algebra dimensions differ");
  const BimodNov ctx = dual_context(alg);
  const HatPair h = hat(r);
  const std::size_t n = alg.dim();
  std::vector<Vec> img, img_t;
  std::vector<Matrix> l_img, r_img_t;
  for (std::size_t a = 0; a < n; ++a) {
    img.push_back(h.hat.column(a));
    img_t.push_back(h.hat_t.column(a));
    l_img.push_back(ctx.bimod.l_of(img.back()));
    r_img_t.push_back(ctx.bimod.r_of(img_t.back()));
  }
  Residual res(mode);
  // The dual context has r = -R*, so R*(y) = -r(y).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec arg = l_img[a].column(b) - r_img_t[b].column(a);
      if (!res.check("operator-form", {a, b}, alg.product(img[a], img[b]) - h.hat.apply(arg)))
        return res;
    }
  return res;
}

std::pair<Algebra, Algebra> dual_pm_products(const Algebra& alg, const RTensor& r) {
  if (!is_invariant(alg, r.sym)) throw SymPartNotInvariant("symmetric part is not invariant");
  return pm_products(dual_context(alg), r.beta, Scalar::zero(alg.field()));
}

Algebra dual_star_product(const Algebra& alg, const Tensor2& r) {
  const BimodNov ctx = dual_context(alg);
  const HatPair h = hat(r);
  const std::size_t n = alg.dim();
  Algebra out(alg.field(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.set_mul(a, b,
                  ctx.bimod.l_of(h.hat.column(a)).column(b) -
                      ctx.bimod.r_of(h.hat_t.column(b)).column(a));
  return out;
}

TensorOperatorVerdicts tensor_operator_verdicts(const Algebra& alg, const RTensor& r) {
  auto [plus, minus] = dual_pm_products(alg, r);
  const Field f = alg.field();
  const BimodNov ctx = dual_context(alg);
  TensorOperatorVerdicts v;
  v.nybe = nybe_residual(alg, r.r).is_zero();
  BimodNov ctx_plus{ctx.bimod, plus}, ctx_minus{ctx.bimod, minus};
  v.hat_operator = o_operator_residual(ctx_plus, r.hat, Scalar::one(f), Eval::FailFast).zero();
  v.minus_hat_t_operator =
      o_operator_residual(ctx_minus, -r.hat_t, Scalar::one(f), Eval::FailFast).zero();
  MassParams p = MassParams::of(f, 0, -1, 0);
  v.skew_extended = ext_o_equation(ctx, r.alpha, r.beta, p, Eval::FailFast).zero();
  const Algebra star = dual_star_product(alg, r.r);
  v.star_plus = homomorphism_identity(star, alg, r.alpha + r.beta, Eval::FailFast).zero();
  v.star_minus = homomorphism_identity(star, alg, r.alpha - r.beta, Eval::FailFast).zero();
  return v;
}

NybePost post_from_nybe(const Algebra& alg, const Tensor2& r) {
  if (!nybe_residual(alg, r).is_zero()) throw NotNYBESolution("tensor does not solve the NYBE");
  RTensor rt(r);
  auto products = dual_pm_products(alg, rt);
  BimodNov ctx{dual_context(alg).bimod, products.first};
  OperatorPost op = post_from_o(ctx, rt.hat, Scalar::one(alg.field()));
  NybePost out{std::move(op.post), std::nullopt, Residual()};
  if (rank(rt.hat) == alg.dim()) {
    out.compatible = push_forward(out.dual, rt.hat);
    const Algebra sum = associated(*out.compatible);
    for (std::size_t x = 0; x < alg.dim(); ++x)
      for (std::size_t y = 0; y < alg.dim(); ++y)
        out.associated_matches.check("associated-equals-base", {x, y},
                                     sum.mul(x, y) - alg.mul(x, y));
  }
  return out;
}

Residual bilform_invariance(const Algebra& alg, const BilForm& b, Eval mode) {
  const std::size_t n = alg.dim();
  if (b.grid.rows() != n || b.grid.cols() != n) throw DimMismatch("form size");
  Residual res(mode);
  const Algebra st = star(alg);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // B(x, e_k) is the k-th entry of G^T x.
        Scalar lhs = b.grid.transpose().apply(alg.mul(i, j))[k];
        Scalar rhs = b.grid.apply(st.mul(i, k))[j];
        if (!res.check("form-invariance", {i, j, k}, lhs + rhs)) return res;
      }
  return res;
}

Residual adjoint_residual(const BilForm& b, const Matrix& t, int sign, Eval mode) {
  const std::size_t n = b.grid.rows();
  if (t.rows() != n || t.cols() != n) throw DimMismatch("map size");
  Scalar s(b.grid.field(), sign >= 0 ? 1 : -1);
  Matrix diff = t.transpose() * b.grid - s * (b.grid * t);
  Residual res(mode);
  for (std::size_t j = 0; j < n; ++j)
    if (!res.check(sign >= 0 ? "self-adjoint" : "skew-adjoint", {j}, diff.column(j))) return res;
  return res;
}

QuadTransport quad_transport(const Algebra& alg, const BilForm& b, const Matrix& t,
                             const Matrix& beta) {
  auto inv = inverse(b.grid);
  if (!inv) throw DegenerateForm("form has rank " + std::to_string(rank(b.grid)));
  Residual self = adjoint_residual(b, beta, 1, Eval::FailFast);
  if (!self.zero()) throw BetaNotSelfAdjoint(self.summary(1));
  QuadTransport q{t * *inv, beta * *inv, Tensor2(), Tensor2(), Residual()};
  q.delta_plus = check_of(q.p_t + q.p_beta);
  q.delta_minus = check_of(q.p_t - q.p_beta);
  if (!b.symmetric()) q.quadratic.check("form-symmetric", {}, Scalar::one(alg.field()));
  q.quadratic.absorb(bilform_invariance(alg, b));
  return q;
}

}  // namespace nova
