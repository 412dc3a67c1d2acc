#include "nova/operators.hpp"

#include "nova/errors.hpp"

namespace nova {

namespace {

void check_map(const BimodNov& ctx, const Matrix& m, const char* what) {
  if (m.rows() != ctx.dim() || m.cols() != ctx.mdim())
    throw DimMismatch(std::string(what) + " must be " + std::to_string(ctx.dim()) + "x" +
                      std::to_string(ctx.mdim()));
  if (m.field() != ctx.field()) throw FieldMismatch(what);
  if (ctx.product.dim() != ctx.mdim()) throw DimMismatch("module product dimension");
}

void require_half(const Field& f, const char* what) {
  if (!f.has_half()) throw NoHalf(std::string(what) + " divides by 2");
}

// l(m e_u) and r(m e_u) for every module basis element u.
struct ActionCache {
  std::vector<Vec> image;
  std::vector<Matrix> l, r;
  ActionCache(const BimodNov& ctx, const Matrix& m) {
    for (std::size_t u = 0; u < ctx.mdim(); ++u) {
      image.push_back(m.column(u));
      l.push_back(ctx.bimod.l_of(image.back()));
      r.push_back(ctx.bimod.r_of(image.back()));
    }
  }
};

// u * v for the star product, from cached actions.
Vec star_at(const BimodNov& ctx, const ActionCache& a, const Scalar& lambda, std::size_t u,
            std::size_t v) {
  Vec out = a.l[u].column(v) + a.r[v].column(u);
  if (!lambda.is_zero()) out.add_scaled(lambda, ctx.product.mul(u, v));
  return out;
}

}  // namespace

Residual balanced_residual(const BimodNov& ctx, const Matrix& beta, Eval mode) {
  check_map(ctx, beta, "beta");
  Residual res(mode);
  ActionCache b(ctx, beta);
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v)
      if (!res.check("balanced", {u, v}, b.l[u].column(v) - b.r[v].column(u))) return res;
  return res;
}

namespace {

void intertwining(const BimodNov& ctx, const Matrix& beta, const Scalar& scale, Residual& res) {
  const Algebra& A = ctx.base();
  for (std::size_t x = 0; x < ctx.dim(); ++x)
    for (std::size_t u = 0; u < ctx.mdim(); ++u) {
      Vec bu = beta.column(u), ex = A.basis(x);
      Vec left = A.product(ex, bu) - beta.apply(ctx.bimod.l[x].column(u));
      if (!res.check("left-invariant", {x, u}, scale * left)) return;
      Vec right = A.product(bu, ex) - beta.apply(ctx.bimod.r[x].column(u));
      if (!res.check("right-invariant", {x, u}, scale * right)) return;
    }
}

}  // namespace

Residual invariant_residual(const BimodNov& ctx, const Matrix& beta, const Scalar& kappa,
                            Eval mode) {
  check_map(ctx, beta, "beta");
  Residual res(mode);
  if (kappa.is_zero()) return res;
  intertwining(ctx, beta, kappa, res);
  return res;
}

Residual homomorphism_residual(const BimodNov& ctx, const Matrix& beta, Eval mode) {
  check_map(ctx, beta, "beta");
  Residual res(mode);
  intertwining(ctx, beta, Scalar::one(ctx.field()), res);
  return res;
}

Residual equivalent_residual(const BimodNov& ctx, const Matrix& beta, const Scalar& mu,
                             Eval mode) {
  check_map(ctx, beta, "beta");
  Residual res(mode);
  if (mu.is_zero()) return res;
  const Algebra& M = ctx.product;
  ActionCache b(ctx, beta);
  const std::size_t m = ctx.mdim();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        Vec uv = M.mul(u, v);
        Vec left = ctx.bimod.l_of(beta.apply(uv)).column(w) -
                   M.product(b.l[u].column(v), M.basis(w));
        if (!res.check("left-equivalent", {u, v, w}, mu * left)) return res;
        // mu r(b(vw))u = mu u (r(b(w))v)
        Vec vw = M.mul(v, w);
        Vec right = ctx.bimod.r_of(beta.apply(vw)).column(u) -
                    M.product(M.basis(u), b.r[w].column(v));
        if (!res.check("right-equivalent", {u, v, w}, mu * right)) return res;
      }
  return res;
}

Residual ext_o_equation(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                        const MassParams& p, Eval mode) {
  check_map(ctx, alpha, "alpha");
  check_map(ctx, beta, "beta");
  Residual res(mode);
  const Algebra& A = ctx.base();
  ActionCache a(ctx, alpha);
  std::vector<Vec> bimg;
  for (std::size_t u = 0; u < ctx.mdim(); ++u) bimg.push_back(beta.column(u));
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v) {
      Vec value = A.product(a.image[u], a.image[v]) - alpha.apply(star_at(ctx, a, p.lambda, u, v));
      if (!p.kappa.is_zero()) value.add_scaled(-p.kappa, A.product(bimg[u], bimg[v]));
      if (!p.mu.is_zero()) value.add_scaled(-p.mu, beta.apply(ctx.product.mul(u, v)));
      if (!res.check("extended-operator", {u, v}, value)) return res;
    }
  return res;
}

Residual ExtOReport::combined() const {
  Residual out;
  out.absorb(equation);
  out.absorb(balanced);
  out.absorb(invariant);
  out.absorb(equivalent);
  return out;
}

ExtOReport ext_o_residual(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                          const MassParams& p, Eval mode) {
  ExtOReport r{ext_o_equation(ctx, alpha, beta, p, mode), Residual(mode), Residual(mode),
               Residual(mode)};
  if (mode == Eval::FailFast && !r.equation.zero()) return r;
  r.balanced = balanced_residual(ctx, beta, mode);
  if (mode == Eval::FailFast && !r.balanced.zero()) return r;
  r.invariant = invariant_residual(ctx, beta, p.kappa, mode);
  if (mode == Eval::FailFast && !r.invariant.zero()) return r;
  r.equivalent = equivalent_residual(ctx, beta, p.mu, mode);
  return r;
}

Residual o_operator_residual(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                             Eval mode) {
  MassParams p = MassParams::zero(ctx.field());
  p.lambda = lambda;
  return ext_o_equation(ctx, alpha, Matrix(ctx.field(), ctx.dim(), ctx.mdim()), p, mode);
}

Residual rota_baxter_residual(const Algebra& alg, const Matrix& t, const Scalar& lambda,
                              Eval mode) {
  return o_operator_residual(regular(alg, false), t, lambda, mode);
}

Residual homomorphism_identity(const Algebra& source, const Algebra& target, const Matrix& phi,
                               Eval mode) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    throw DimMismatch("homomorphism shape");
  Residual res(mode);
  std::vector<Vec> img;
  for (std::size_t u = 0; u < source.dim(); ++u) img.push_back(phi.column(u));
  for (std::size_t u = 0; u < source.dim(); ++u)
    for (std::size_t v = 0; v < source.dim(); ++v)
      if (!res.check("homomorphism", {u, v},
                     target.product(img[u], img[v]) - phi.apply(source.mul(u, v))))
        return res;
  return res;
}

Algebra star_product(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda) {
  check_map(ctx, alpha, "alpha");
  ActionCache a(ctx, alpha);
  Algebra out(ctx.field(), ctx.mdim());
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v) out.set_mul(u, v, star_at(ctx, a, lambda, u, v));
  return out;
}

Residual star_conditions(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                         Eval mode) {
  check_map(ctx, alpha, "alpha");
  Residual res(mode);
  const std::size_t m = ctx.mdim();
  ActionCache a(ctx, alpha);
  const Algebra& A = ctx.base();
  // defect(u,v) = a(u*v) - a(u)a(v), and its actions
  std::vector<Matrix> ld(m * m), rd(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec d = alpha.apply(star_at(ctx, a, lambda, u, v)) - A.product(a.image[u], a.image[v]);
      ld[u * m + v] = ctx.bimod.l_of(d);
      rd[u * m + v] = ctx.bimod.r_of(d);
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        Vec first = ld[u * m + v].column(w) - ld[u * m + w].column(v);
        if (!res.check("star-right-commutativity", {u, v, w}, first)) return res;
        Vec second = ld[u * m + v].column(w) - ld[v * m + u].column(w) -
                     rd[v * m + w].column(u) + rd[u * m + w].column(v);
        if (!res.check("star-left-symmetry", {u, v, w}, second)) return res;
      }
  return res;
}

DiamondProduct diamond_product(const BimodNov& ctx, const Matrix& dplus, const Matrix& dminus,
                               const Scalar& lambda) {
  check_map(ctx, dplus, "delta+");
  check_map(ctx, dminus, "delta-");
  require_half(ctx.field(), "diamond product");
  Scalar half = Scalar(ctx.field(), 2).inverse();
  ActionCache p(ctx, dplus), q(ctx, dminus);
  Algebra out(ctx.field(), ctx.mdim());
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v) {
      Vec val = p.l[u].column(v) + q.r[v].column(u);
      val.add_scaled(lambda, ctx.product.mul(u, v));
      out.set_mul(u, v, val);
    }
  return {std::move(out), half * (dplus + dminus), half * (dplus - dminus)};
}

std::pair<Algebra, Algebra> pm_products(const BimodNov& ctx, const Matrix& beta,
                                        const Scalar& lambda) {
  check_map(ctx, beta, "beta");
  require_half(ctx.field(), "signed products");
  ActionCache b(ctx, beta);
  const Scalar two(ctx.field(), 2);
  Algebra plus(ctx.field(), ctx.mdim()), minus(ctx.field(), ctx.mdim());
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v) {
      Vec base = lambda * ctx.product.mul(u, v);
      Vec shift = two * b.l[u].column(v);
      plus.set_mul(u, v, base - shift);
      minus.set_mul(u, v, base + shift);
    }
  return {std::move(plus), std::move(minus)};
}

Algebra circ_T(const Algebra& alg, const Matrix& t, const Scalar& lambda) {
  if (t.rows() != alg.dim() || t.cols() != alg.dim()) throw DimMismatch("T must be square");
  Algebra out(alg.field(), alg.dim());
  for (std::size_t x = 0; x < alg.dim(); ++x)
    for (std::size_t y = 0; y < alg.dim(); ++y) {
      Vec val = alg.product(t.column(x), alg.basis(y)) + alg.product(alg.basis(x), t.column(y));
      val.add_scaled(lambda, alg.mul(x, y));
      out.set_mul(x, y, val);
    }
  return out;
}

Residual identity_extension_residual(const Algebra& alg, const Matrix& t, const Scalar& lambda,
                                     const Scalar& khat, Eval mode) {
  MassParams p = MassParams::zero(alg.field());
  p.lambda = lambda;
  p.kappa = khat;
  return ext_o_equation(regular(alg, false), t, Matrix::identity(alg.field(), alg.dim()), p, mode);
}

}  // namespace nova
