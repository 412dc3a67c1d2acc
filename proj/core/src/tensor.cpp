#include "nova/tensor.hpp"

#include "nova/errors.hpp"

namespace nova {

namespace {

std::string term(const Scalar& c, const std::vector<std::size_t>& idx) {
  std::string out = c.to_string() + " ";
  for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "(x)e" : "e") + std::to_string(idx[k] + 1);
  return out;
}

}  // namespace

Tensor2 Tensor2::of(Field f, std::size_t n, std::initializer_list<long long> entries) {
  if (entries.size() != n * n) throw DimMismatch("tensor literal size");
  Tensor2 t(f, n);
  std::size_t k = 0;
  for (long long x : entries) t.g_[k++] = Scalar(f, x);
  return t;
}

Tensor2 Tensor2::from_grid(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimMismatch("tensor grid must be square");
  Tensor2 t(m.field(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(i, j) = m.at(i, j);
  return t;
}

Matrix Tensor2::grid() const {
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
  return m;
}

bool Tensor2::is_zero() const {
  for (const Scalar& s : g_)
    if (!s.is_zero()) return false;
  return true;
}

bool Tensor2::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Tensor2::is_skew() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

std::string Tensor2::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) out += (out.empty() ? "" : " + ") + term(at(i, j), {i, j});
  return out.empty() ? "0" : out;
}

void Tensor2::check(const Tensor2& o) const {
  if (field_ != o.field_) throw FieldMismatch("tensor fields");
  if (n_ != o.n_) throw DimMismatch("tensor dimensions");
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  check(o);
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] += o.g_[k];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  check(o);
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] -= o.g_[k];
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  for (Scalar& x : g_) x *= s;
  return *this;
}

bool operator==(const Tensor2& a, const Tensor2& b) {
  a.check(b);
  for (std::size_t k = 0; k < a.g_.size(); ++k)
    if (a.g_[k] != b.g_[k]) return false;
  return true;
}

bool Tensor3::is_zero() const {
  for (const Scalar& s : g_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Tensor3::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!at(i, j, k).is_zero())
          out += (out.empty() ? "" : " + ") + term(at(i, j, k), {i, j, k});
  return out.empty() ? "0" : out;
}

void Tensor3::check(const Tensor3& o) const {
  if (field_ != o.field_) throw FieldMismatch("tensor fields");
  if (n_ != o.n_) throw DimMismatch("tensor dimensions");
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  check(o);
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] += o.g_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  check(o);
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] -= o.g_[k];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s) {
  for (Scalar& x : g_) x *= s;
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  a.check(b);
  for (std::size_t k = 0; k < a.g_.size(); ++k)
    if (a.g_[k] != b.g_[k]) return false;
  return true;
}

Tensor2 flip(const Tensor2& r) {
  Tensor2 t(r.field(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) t.at(i, j) = r.at(j, i);
  return t;
}

Tensor2 apply_each(const Tensor2& t, const Matrix& x, const Matrix& y) {
  const std::size_t n = t.dim();
  if (x.cols() != n || y.cols() != n || x.rows() != n || y.rows() != n)
    throw DimMismatch("apply_each shapes");
  // (X (x) Y) t has grid X G Y^T.
  return Tensor2::from_grid(x * t.grid() * y.transpose());
}

Tensor3 apply_slot(const Tensor3& t, std::size_t slot, const Matrix& m) {
  const std::size_t n = t.dim();
  if (slot > 2) throw DimMismatch("tensor slot");
  if (m.rows() != n || m.cols() != n) throw DimMismatch("apply_slot shape");
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t.at(i, j, k);
        if (c.is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          std::size_t src = slot == 0 ? i : slot == 1 ? j : k;
          const Scalar& mq = m.at(q, src);
          if (mq.is_zero()) continue;
          std::size_t a = slot == 0 ? q : i, b = slot == 1 ? q : j, d = slot == 2 ? q : k;
          out.at(a, b, d) += mq * c;
        }
      }
  return out;
}

Tensor3 swap_slots(const Tensor3& t, std::size_t s1, std::size_t s2) {
  if (s1 > 2 || s2 > 2) throw DimMismatch("tensor slot");
  const std::size_t n = t.dim();
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t idx[3] = {i, j, k};
        std::swap(idx[s1], idx[s2]);
        out.at(idx[0], idx[1], idx[2]) = t.at(i, j, k);
      }
  return out;
}

namespace {

struct ContractionName {
  Contraction kind;
  const char* name;
};

constexpr ContractionName kNames[] = {
    {Contraction::C12_13, "12o13"},    {Contraction::C12_23, "12o23"},
    {Contraction::C13_23, "13o23"},    {Contraction::C13_12, "13o12"},
    {Contraction::C23_13, "23o13"},    {Contraction::Star12_23, "12*23"},
    {Contraction::Star13_23, "13*23"},
};

}  // namespace

Contraction parse_contraction(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.kind;
  throw BadContraction("unknown contraction '" + name + "'");
}

std::string contraction_name(Contraction c) {
  for (const auto& n : kNames)
    if (c == n.kind) return n.name;
  throw BadContraction("unknown contraction kind");
}

Tensor3 tensor3_combine(const Algebra& alg, const Tensor2& r, const Tensor2& s, Contraction kind) {
  const std::size_t n = alg.dim();
  if (r.dim() != n || s.dim() != n) throw DimMismatch("contraction operands");
  if (r.field() != alg.field() || s.field() != alg.field()) throw FieldMismatch("contraction");
  contraction_name(kind);  // rejects out-of-range values
  const Field f = alg.field();
  Tensor3 out(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& rab = r.at(a, b);
      if (rab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar& scd = s.at(c, d);
          if (scd.is_zero()) continue;
          Scalar w = rab * scd;
          for (std::size_t p = 0; p < n; ++p) {
            switch (kind) {
              case Contraction::C12_13:
                out.at(p, b, d) += w * alg.coeff(a, c, p);
                break;
              case Contraction::C12_23:
                out.at(a, p, d) += w * alg.coeff(b, c, p);
                break;
              case Contraction::C13_23:
                out.at(a, c, p) += w * alg.coeff(b, d, p);
                break;
              case Contraction::C13_12:
                out.at(p, d, b) += w * alg.coeff(a, c, p);
                break;
              case Contraction::C23_13:
                out.at(c, a, p) += w * alg.coeff(b, d, p);
                break;
              case Contraction::Star12_23:
                out.at(a, p, d) += w * (alg.coeff(b, c, p) + alg.coeff(c, b, p));
                break;
              case Contraction::Star13_23:
                out.at(a, c, p) += w * (alg.coeff(b, d, p) + alg.coeff(d, b, p));
                break;
            }
          }
        }
    }
  return out;
}

}  // namespace nova
