#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nova/scalar.hpp"

namespace nova {

// Coordinate vector in a based space. Length is the dimension of that space.
class Vec {
 public:
  Vec() = default;
  Vec(Field f, std::size_t n) : field_(f), c_(n, Scalar::zero(f)) {}
  Vec(Field f, std::vector<Scalar> coords);

  static Vec basis(Field f, std::size_t n, std::size_t i);
  // Convenience for tests and fixtures.
  static Vec of(Field f, std::initializer_list<long long> coords);

  const Field& field() const { return field_; }
  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }
  bool is_zero() const;
  std::string to_string() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  // this += s * o
  Vec& add_scaled(const Scalar& s, const Vec& o);
  Vec operator-() const;

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b);
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

 private:
  void check_compatible(const Vec& o) const;

  Field field_;
  std::vector<Scalar> c_;
};

// Dense matrix. Column j is the image of the j-th domain basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  // Row-major integer literal, for tests and fixtures.
  static Matrix of(Field f, std::size_t rows, std::size_t cols,
                   std::initializer_list<long long> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return e_; }

  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_shape(const Matrix& o) const;

  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// Reduced row echelon form with leftmost pivots normalised to 1.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Null space basis: one vector per free column, in increasing column order.
std::vector<Vec> kernel_basis(const Matrix& m);
// Indices of the leftmost-pivot columns, which span the column space.
std::vector<std::size_t> column_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Some x with m x = b, or nothing if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace nova
