#include "nova/postnov.hpp"

#include <array>

#include "nova/errors.hpp"

namespace nova {

namespace {

void check_same_shape(const PostNov& p) {
  if (p.tri_l.dim() != p.dim() || p.tri_r.dim() != p.dim())
    throw DimMismatch("post-Novikov products differ in dimension");
  if (p.tri_l.field() != p.field() || p.tri_r.field() != p.field())
    throw FieldMismatch("post-Novikov products differ in field");
}

}  // namespace

Residual post_residual(const PostNov& p, Eval mode) {
  check_same_shape(p);
  Residual res(mode);
  res.absorb(novikov_residual(p.circ, mode), "circ ");
  if (res.done()) return res;
  const Algebra &o = p.circ, &L = p.tri_l, &R = p.tri_r;
  const Algebra sum = associated(p);
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec a = o.basis(i), b = o.basis(j), c = o.basis(k);
        const Vec ab_sum = sum.mul(i, j);
        if (!res.check("nd1", {i, j, k}, L.product(R.mul(i, k), b) - R.product(ab_sum, c)))
          return res;
        if (!res.check("nd2", {i, j, k},
                       R.product(a, L.mul(k, j)) - L.product(R.mul(i, k), b) +
                           L.product(L.mul(k, i), b) - L.product(c, ab_sum)))
          return res;
        if (!res.check("nd3", {i, j, k},
                       R.product(ab_sum, c) - R.product(sum.mul(j, i), c) -
                           R.product(a, R.mul(j, k)) + R.product(b, R.mul(i, k))))
          return res;
        if (!res.check("nd4", {i, j, k}, L.product(L.mul(i, j), c) - L.product(L.mul(i, k), b)))
          return res;
        if (!res.check("post7", {i, j, k},
                       o.product(R.mul(i, j), c) - R.product(a, o.mul(j, k)) -
                           o.product(L.mul(j, i), c) + o.product(b, R.mul(i, k))))
          return res;
        if (!res.check("post8", {i, j, k},
                       L.product(o.mul(j, k), a) - o.product(b, L.mul(k, i)) -
                           L.product(o.mul(k, j), a) + o.product(c, L.mul(j, i))))
          return res;
        if (!res.check("post9", {i, j, k}, o.product(R.mul(i, j), c) - o.product(R.mul(i, k), b)))
          return res;
        if (!res.check("post10", {i, j, k}, L.product(o.mul(i, j), c) - o.product(L.mul(i, k), b)))
          return res;
      }
  return res;
}

Algebra associated(const PostNov& p) {
  check_same_shape(p);
  Algebra out(p.field(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      out.set_mul(i, j, p.tri_r.mul(i, j) + p.tri_l.mul(i, j) + p.circ.mul(i, j));
  return out;
}

BimodNov lr_bimodule(const PostNov& p) {
  Residual res = post_residual(p, Eval::FailFast);
  if (!res.zero()) throw NotPostNovikov(res.summary(1));
  Bimodule b{associated(p), p.dim(), {}, {}};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    b.l.push_back(p.tri_r.left_basis(i));
    b.r.push_back(p.tri_l.right_basis(i));
  }
  return BimodNov{std::move(b), p.circ};
}

Residual trialgebra_residual(const CommTrialgebra& t, Eval mode) {
  const Algebra &dot = t.dot, &o = t.circ;
  if (dot.dim() != o.dim()) throw DimMismatch("trialgebra products differ in dimension");
  Residual res(mode);
  const std::size_t n = dot.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!res.check("dot-commutative", {i, j}, dot.mul(i, j) - dot.mul(j, i))) return res;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec a = dot.basis(i), b = dot.basis(j), c = dot.basis(k);
        if (!res.check("dot-associative", {i, j, k},
                       dot.product(dot.mul(i, j), c) - dot.product(a, dot.mul(j, k))))
          return res;
        const Vec ab_c = o.product(o.mul(i, j), c);
        if (!res.check("circ-expansion", {i, j, k},
                       ab_c - o.product(a, o.mul(j, k) + o.mul(k, j) + dot.mul(j, k))))
          return res;
        if (!res.check("circ-right-commutative", {i, j, k}, ab_c - o.product(o.mul(i, k), b)))
          return res;
        if (!res.check("circ-dot-left", {i, j, k},
                       dot.product(o.mul(i, j), c) - dot.product(a, o.mul(k, j))))
          return res;
        if (!res.check("circ-dot-right", {i, j, k},
                       o.product(dot.mul(i, j), c) - dot.product(o.mul(i, k), b)))
          return res;
      }
  return res;
}

Residual derivation_residual(const CommTrialgebra& t, Eval mode) {
  const Matrix& d = t.derivation;
  const std::size_t n = t.dot.dim();
  if (d.rows() != n || d.cols() != n) throw DimMismatch("derivation must be square");
  Residual res(mode);
  for (const auto& [name, alg] : {std::pair<const char*, const Algebra*>{"dot-derivation", &t.dot},
                                  {"circ-derivation", &t.circ}})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = d.apply(alg->mul(i, j));
        Vec rhs = alg->product(d.column(i), alg->basis(j)) + alg->product(alg->basis(i), d.column(j));
        if (!res.check(name, {i, j}, lhs - rhs)) return res;
      }
  return res;
}

PostNov post_from_trialgebra(const CommTrialgebra& t) {
  Residual tri = trialgebra_residual(t, Eval::FailFast);
  if (!tri.zero()) throw NotTrialgebra(tri.summary(1));
  Residual der = derivation_residual(t, Eval::FailFast);
  if (!der.zero()) throw NotDerivation(der.summary(1));
  const std::size_t n = t.dot.dim();
  PostNov p = PostNov::zero(t.dot.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec dj = t.derivation.column(j);
      p.circ.set_mul(i, j, t.dot.product(t.dot.basis(i), dj));
      p.tri_l.set_mul(i, j, t.circ.product(t.circ.basis(i), dj));
      p.tri_r.set_mul(i, j, t.circ.product(dj, t.circ.basis(i)));
    }
  return p;
}

namespace {

void require_operator(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda) {
  Residual res = o_operator_residual(ctx, alpha, lambda, Eval::FailFast);
  if (!res.zero()) throw NotOOperator(res.summary(1));
}

PostNov operator_post(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda) {
  const std::size_t m = ctx.mdim();
  PostNov p = PostNov::zero(ctx.field(), m);
  std::vector<Matrix> l, r;
  for (std::size_t u = 0; u < m; ++u) {
    Vec au = alpha.column(u);
    l.push_back(ctx.bimod.l_of(au));
    r.push_back(ctx.bimod.r_of(au));
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      p.circ.set_mul(u, v, lambda * ctx.product.mul(u, v));
      p.tri_r.set_mul(u, v, l[u].column(v));
      p.tri_l.set_mul(u, v, r[v].column(u));
    }
  return p;
}

}  // namespace

OperatorPost post_from_o(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda) {
  require_operator(ctx, alpha, lambda);
  PostNov p = operator_post(ctx, alpha, lambda);
  Residual hom = homomorphism_identity(associated(p), ctx.base(), alpha);
  return {std::move(p), std::move(hom)};
}

ImagePost post_on_image(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda) {
  require_operator(ctx, alpha, lambda);
  const Algebra& M = ctx.product;
  const std::vector<Vec> kernel = kernel_basis(alpha);
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (std::size_t u = 0; u < ctx.mdim(); ++u) {
      const Vec e = M.basis(u);
      if (!alpha.apply(M.product(kernel[k], e)).is_zero() ||
          !alpha.apply(M.product(e, kernel[k])).is_zero())
        throw KernelNotIdeal("kernel vector " + kernel[k].to_string() + " times e" +
                             std::to_string(u + 1) + " leaves the kernel");
    }

  ImagePost out{PostNov{}, Matrix{}, column_basis(alpha), Residual(), Residual()};
  const std::size_t rk = out.preimages.size();
  std::vector<Vec> cols;
  for (std::size_t p : out.preimages) cols.push_back(alpha.column(p));
  out.basis = Matrix::from_columns(ctx.field(), ctx.dim(), cols);
  out.post = PostNov::zero(ctx.field(), rk);

  auto coords = [&](const Vec& y) {
    auto c = solve(out.basis, y);
    if (!c) throw Error("image product left the image");
    return *c;
  };
  // The three image products evaluated on preimages x, y of two image vectors, as
  // vectors in A.
  auto products = [&](const Vec& x, const Vec& y) {
    Vec ax = alpha.apply(x), ay = alpha.apply(y);
    return std::array<Vec, 3>{lambda * alpha.apply(M.product(x, y)),
                              alpha.apply(ctx.bimod.r_of(ay).apply(x)),
                              alpha.apply(ctx.bimod.l_of(ax).apply(y))};
  };

  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < rk; ++j) {
      const Vec x = M.basis(out.preimages[i]), y = M.basis(out.preimages[j]);
      auto ref = products(x, y);
      out.post.circ.set_mul(i, j, coords(ref[0]));
      out.post.tri_l.set_mul(i, j, coords(ref[1]));
      out.post.tri_r.set_mul(i, j, coords(ref[2]));
      static const char* names[3] = {"circ-preimage", "tri_l-preimage", "tri_r-preimage"};
      for (std::size_t k = 0; k < kernel.size(); ++k) {
        auto shifted_x = products(x + kernel[k], y);
        auto shifted_y = products(x, y + kernel[k]);
        for (int s = 0; s < 3; ++s) {
          out.preimage_independence.check(names[s], {i, j, k}, shifted_x[s] - ref[s]);
          out.preimage_independence.check(names[s], {i, j, k}, shifted_y[s] - ref[s]);
        }
      }
    }

  // alpha(u op v) = alpha(u) op_image alpha(v) for each of the three products.
  const PostNov source = operator_post(ctx, alpha, lambda);
  const Algebra* src[3] = {&source.circ, &source.tri_l, &source.tri_r};
  const Algebra* img[3] = {&out.post.circ, &out.post.tri_l, &out.post.tri_r};
  static const char* hom_names[3] = {"circ-homomorphism", "tri_l-homomorphism",
                                     "tri_r-homomorphism"};
  for (std::size_t u = 0; u < ctx.mdim(); ++u)
    for (std::size_t v = 0; v < ctx.mdim(); ++v) {
      Vec cu = coords(alpha.column(u)), cv = coords(alpha.column(v));
      for (int s = 0; s < 3; ++s) {
        Vec lhs = alpha.apply(src[s]->mul(u, v));
        Vec rhs = out.basis.apply(img[s]->product(cu, cv));
        out.homomorphism.check(hom_names[s], {u, v}, lhs - rhs);
      }
    }
  return out;
}

PostNov post_from_rb(const Algebra& alg, const Matrix& t, const Scalar& lambda) {
  Residual res = rota_baxter_residual(alg, t, lambda, Eval::FailFast);
  if (!res.zero()) throw NotRotaBaxter(res.summary(1));
  const std::size_t n = alg.dim();
  PostNov p = PostNov::zero(alg.field(), n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      p.circ.set_mul(x, y, lambda * alg.mul(x, y));
      p.tri_r.set_mul(x, y, alg.product(t.column(x), alg.basis(y)));
      p.tri_l.set_mul(x, y, alg.product(alg.basis(x), t.column(y)));
    }
  return p;
}

PostNov push_forward(const PostNov& p, const Matrix& iso) {
  if (iso.rows() != p.dim() || iso.cols() != p.dim()) throw DimMismatch("map size");
  auto inv = inverse(iso);
  if (!inv) throw SingularT("map has rank " + std::to_string(rank(iso)));
  const std::size_t n = p.dim();
  PostNov out = PostNov::zero(p.field(), n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec ix = inv->column(x), iy = inv->column(y);
      out.circ.set_mul(x, y, iso.apply(p.circ.product(ix, iy)));
      out.tri_l.set_mul(x, y, iso.apply(p.tri_l.product(ix, iy)));
      out.tri_r.set_mul(x, y, iso.apply(p.tri_r.product(ix, iy)));
    }
  return out;
}

CompatiblePost post_from_rb_invertible(const Algebra& alg, const Matrix& t,
                                       const Scalar& lambda) {
  Residual res = rota_baxter_residual(alg, t, lambda, Eval::FailFast);
  if (!res.zero()) throw NotRotaBaxter(res.summary(1));
  auto inv = inverse(t);
  if (!inv) throw SingularT("T has rank " + std::to_string(rank(t)));
  const std::size_t n = alg.dim();
  CompatiblePost out{PostNov::zero(alg.field(), n), Residual()};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec ix = inv->column(x), iy = inv->column(y);
      out.post.circ.set_mul(x, y, lambda * t.apply(alg.product(ix, iy)));
      out.post.tri_r.set_mul(x, y, t.apply(alg.product(alg.basis(x), iy)));
      out.post.tri_l.set_mul(x, y, t.apply(alg.product(ix, alg.basis(y))));
    }
  const Algebra sum = associated(out.post);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out.associated_matches.check("associated-equals-base", {x, y}, sum.mul(x, y) - alg.mul(x, y));
  return out;
}

}  // namespace nova
