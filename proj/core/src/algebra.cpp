#include "nova/algebra.hpp"

#include "nova/errors.hpp"

namespace nova {

Algebra::Algebra(Field f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {}

Algebra Algebra::from_table(Field f, std::size_t dim,
                            const std::vector<std::vector<Vec>>& table) {
  if (table.size() != dim) throw DimMismatch("product table rows");
  Algebra a(f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (table[i].size() != dim) throw DimMismatch("product table columns");
    for (std::size_t j = 0; j < dim; ++j) a.set_mul(i, j, table[i][j]);
  }
  return a;
}

Vec Algebra::mul(std::size_t i, std::size_t j) const {
  Vec v(field_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = coeff(i, j, k);
  return v;
}

void Algebra::set_mul(std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != dim_) throw DimMismatch("product entry length");
  if (v.field() != field_) throw FieldMismatch("product entry field");
  for (std::size_t k = 0; k < dim_; ++k) coeff(i, j, k) = v[k];
}

Vec Algebra::product(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimMismatch("product operands");
  Vec out(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar s = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = coeff(i, j, k);
        if (!c.is_zero()) out[k] += s * c;
      }
    }
  }
  return out;
}

Matrix Algebra::left(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, product(a, basis(j)));
  return m;
}

Matrix Algebra::right(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, product(basis(j), a));
  return m;
}

Matrix Algebra::left_basis(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = coeff(i, j, k);
  return m;
}

Matrix Algebra::right_basis(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = coeff(j, i, k);
  return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.field_ != b.field_ || a.dim_ != b.dim_) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

LRMatrices lr_matrices(const Algebra& alg, const Vec& a) {
  Matrix l = alg.left(a), r = alg.right(a);
  Matrix s = l + r;
  return {std::move(l), std::move(r), std::move(s)};
}

Algebra star(const Algebra& alg) {
  Algebra s(alg.field(), alg.dim());
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.coeff(i, j, k) = alg.coeff(i, j, k) + alg.coeff(j, i, k);
  return s;
}

Residual novikov_residual(const Algebra& alg, Eval mode) {
  Residual res(mode);
  const std::size_t n = alg.dim();
  std::vector<Matrix> left(n), right(n);
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = alg.left_basis(i);
    right[i] = alg.right_basis(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = alg.mul(i, j);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec ab_c = right[c].apply(prod[a * n + b]);
        Vec ba_c = right[c].apply(prod[b * n + a]);
        Vec a_bc = left[a].apply(prod[b * n + c]);
        Vec b_ac = left[b].apply(prod[a * n + c]);
        if (!res.check("left-symmetry", {a, b, c}, (ab_c - a_bc) - (ba_c - b_ac))) return res;
        Vec ac_b = right[b].apply(prod[a * n + c]);
        if (!res.check("right-commutativity", {a, b, c}, ab_c - ac_b)) return res;
      }
  return res;
}

Bimodule Bimodule::zero(const Algebra& base, std::size_t mdim) {
  Bimodule b{base, mdim, {}, {}};
  b.l.assign(base.dim(), Matrix(base.field(), mdim, mdim));
  b.r.assign(base.dim(), Matrix(base.field(), mdim, mdim));
  return b;
}

Bimodule Bimodule::regular(const Algebra& base) {
  Bimodule b{base, base.dim(), {}, {}};
  for (std::size_t i = 0; i < base.dim(); ++i) {
    b.l.push_back(base.left_basis(i));
    b.r.push_back(base.right_basis(i));
  }
  return b;
}

Matrix Bimodule::l_of(const Vec& a) const {
  if (a.size() != base.dim()) throw DimMismatch("action argument");
  Matrix m(field(), mdim, mdim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m += a[i] * l[i];
  return m;
}

Matrix Bimodule::r_of(const Vec& a) const {
  if (a.size() != base.dim()) throw DimMismatch("action argument");
  Matrix m(field(), mdim, mdim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m += a[i] * r[i];
  return m;
}

namespace {

void check_shape(const Bimodule& b) {
  const std::size_t n = b.base.dim();
  if (b.l.size() != n || b.r.size() != n) throw DimMismatch("one action matrix per basis element");
  for (std::size_t i = 0; i < n; ++i)
    for (const Matrix* m : {&b.l[i], &b.r[i]})
      if (m->rows() != b.mdim || m->cols() != b.mdim)
        throw DimMismatch("action matrices must be mdim x mdim");
}

}  // namespace

Residual bimodule_residual(const Bimodule& b, Eval mode) {
  check_shape(b);
  Residual res(mode);
  const Algebra& A = b.base;
  const std::size_t n = A.dim(), m = b.mdim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Vec ac = A.mul(a, c), ca = A.mul(c, a);
      Matrix l_bracket = b.l_of(ac - ca) - (b.l[a] * b.l[c] - b.l[c] * b.l[a]);
      Matrix lr = b.l[a] * b.r[c] - b.r[c] * b.l[a] - b.r_of(ac) + b.r[c] * b.r[a];
      Matrix l_prod = b.l_of(ac) - b.r[c] * b.l[a];
      Matrix r_comm = b.r[a] * b.r[c] - b.r[c] * b.r[a];
      for (std::size_t v = 0; v < m; ++v) {
        if (!res.check("l-bracket", {a, c, v}, l_bracket.column(v))) return res;
        if (!res.check("l-r-commutator", {a, c, v}, lr.column(v))) return res;
        if (!res.check("l-of-product", {a, c, v}, l_prod.column(v))) return res;
        if (!res.check("r-commute", {a, c, v}, r_comm.column(v))) return res;
      }
    }
  return res;
}

namespace {

void compatibility(const BimodNov& b, Residual& res) {
  const Bimodule& bm = b.bimod;
  const Algebra& M = b.product;
  const std::size_t n = bm.base.dim(), m = bm.mdim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        Vec ev = bm.module_basis(v), ew = bm.module_basis(w);
        Vec lav = bm.l[a].column(v), law = bm.l[a].column(w);
        Vec rav = bm.r[a].column(v), raw = bm.r[a].column(w);
        Vec vw = M.mul(v, w), wv = M.mul(w, v);
        Vec lav_w = M.product(lav, ew);
        Vec l_assoc = lav_w - bm.l[a].apply(vw) - M.product(rav, ew) + M.product(ev, law);
        if (!res.check("l-associator", {a, v, w}, l_assoc)) return;
        Vec ra_vw = bm.r[a].apply(vw);
        Vec r_assoc = ra_vw - M.product(ev, raw) - bm.r[a].apply(wv) + M.product(ew, rav);
        if (!res.check("r-associator", {a, v, w}, r_assoc)) return;
        if (!res.check("l-right-commute", {a, v, w}, lav_w - M.product(law, ev))) return;
        if (!res.check("r-product", {a, v, w}, ra_vw - M.product(rav, ew))) return;
      }
}

void check_module_product(const BimodNov& b) {
  if (b.product.dim() != b.bimod.mdim) throw DimMismatch("module product dimension");
  if (b.product.field() != b.field()) throw FieldMismatch("module product field");
}

}  // namespace

Residual abnova_residual(const BimodNov& b, Eval mode) {
  check_module_product(b);
  if (!bimodule_residual(b.bimod, Eval::FailFast).zero())
    throw NotABimodule("action identities fail");
  if (!is_novikov(b.product)) throw ModuleNotNovikov("module product is not Novikov");
  Residual res(mode);
  compatibility(b, res);
  return res;
}

Residual bimodnov_residual(const BimodNov& b, Eval mode) {
  check_module_product(b);
  Residual res = bimodule_residual(b.bimod, mode);
  if (res.done()) return res;
  res.absorb(novikov_residual(b.product, mode), "module ");
  if (res.done()) return res;
  compatibility(b, res);
  return res;
}

Bimodule dual_bimodule(const Bimodule& b, bool validate) {
  if (validate && !bimodule_residual(b, Eval::FailFast).zero())
    throw NotABimodule("dual of an invalid bimodule");
  Bimodule d{b.base, b.mdim, {}, {}};
  for (std::size_t i = 0; i < b.base.dim(); ++i) {
    Matrix lt = b.l[i].transpose(), rt = b.r[i].transpose();
    d.l.push_back(-lt - rt);
    d.r.push_back(rt);
  }
  return d;
}

Algebra semidirect(const BimodNov& b) {
  check_module_product(b);
  check_shape(b.bimod);
  const Bimodule& bm = b.bimod;
  const std::size_t n = bm.base.dim(), m = bm.mdim;
  Algebra s(b.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.coeff(i, j, k) = bm.base.coeff(i, j, k);
  // a * v = l(a) v and v * a = r(a) v
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) {
        s.coeff(i, n + v, n + k) = bm.l[i].at(k, v);
        s.coeff(n + v, i, n + k) = bm.r[i].at(k, v);
      }
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t k = 0; k < m; ++k) s.coeff(n + v, n + w, n + k) = b.product.coeff(v, w, k);
  return s;
}

Algebra semidirect(const Bimodule& b) { return semidirect(with_trivial_product(b)); }

BimodNov regular(const Algebra& alg, bool validate) {
  if (validate && !is_novikov(alg)) throw NotNovikov("regular context needs a Novikov algebra");
  return BimodNov{Bimodule::regular(alg), alg};
}

BimodNov with_trivial_product(const Bimodule& b) {
  return BimodNov{b, Algebra(b.field(), b.mdim)};
}

}  // namespace nova
