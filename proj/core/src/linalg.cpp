#include "nova/linalg.hpp"

#include <sstream>

#include "nova/errors.hpp"

namespace nova {

Vec::Vec(Field f, std::vector<Scalar> coords) : field_(f), c_(std::move(coords)) {
  for (const Scalar& s : c_)
    if (s.field() != f) throw FieldMismatch("vector entry in " + s.field().name());
}

Vec Vec::basis(Field f, std::size_t n, std::size_t i) {
  if (i >= n) throw DimMismatch("basis index out of range");
  Vec v(f, n);
  v.c_[i] = Scalar::one(f);
  return v;
}

Vec Vec::of(Field f, std::initializer_list<long long> coords) {
  std::vector<Scalar> c;
  for (long long x : coords) c.emplace_back(f, x);
  return Vec(f, std::move(c));
}

bool Vec::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Vec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].to_string();
  }
  return out + ")";
}

void Vec::check_compatible(const Vec& o) const {
  if (field_ != o.field_) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
  if (c_.size() != o.c_.size())
    throw DimMismatch("vector lengths " + std::to_string(c_.size()) + " and " +
                      std::to_string(o.c_.size()));
}

Vec& Vec::operator+=(const Vec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (Scalar& x : c_) x *= s;
  return *this;
}

Vec& Vec::add_scaled(const Scalar& s, const Vec& o) {
  check_compatible(o);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += s * o.c_[i];
  return *this;
}

Vec Vec::operator-() const {
  Vec out = *this;
  for (Scalar& x : out.c_) x = -x;
  return out;
}

bool operator==(const Vec& a, const Vec& b) {
  a.check_compatible(b);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::of(Field f, std::size_t rows, std::size_t cols,
                  std::initializer_list<long long> entries) {
  if (entries.size() != rows * cols) throw DimMismatch("matrix literal size");
  Matrix m(f, rows, cols);
  std::size_t k = 0;
  for (long long x : entries) m.e_[k++] = Scalar(f, x);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimMismatch("column length");
  if (v.field() != field_) throw FieldMismatch("column field");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_)
    throw DimMismatch("apply: matrix has " + std::to_string(cols_) + " columns, vector " +
                      std::to_string(v.size()));
  if (v.field() != field_) throw FieldMismatch("apply");
  Vec out(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

void Matrix::check_shape(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix shapes");
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_shape(o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_shape(o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (Scalar& x : e_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (Scalar& x : out.e_) x = -x;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product");
  if (a.cols_ != b.rows_) throw DimMismatch("matrix product shapes");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  a.check_shape(b);
  for (std::size_t k = 0; k < a.e_.size(); ++k)
    if (a.e_[k] != b.e_[k]) return false;
  return true;
}

Echelon rref(const Matrix& m) {
  for (const Scalar& s : m.entries())
    if (s.field() != m.field())
      throw FieldMismatch("matrix entry in " + s.field().name() + ", matrix over " +
                          m.field().name());
  Echelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> column_basis(const Matrix& m) { return rref(m).pivots; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimMismatch("solve: right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced.at(r, m.cols());
  }
  return x;
}

}  // namespace nova
