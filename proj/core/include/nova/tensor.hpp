#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/linalg.hpp"

namespace nova {

// sum_{ij} at(i,j) e_i (x) e_j
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(Field f, std::size_t n) : field_(f), n_(n), g_(n * n, Scalar::zero(f)) {}
  // Row-major integer literal.
  static Tensor2 of(Field f, std::size_t n, std::initializer_list<long long> entries);
  // The grid of a matrix read entry-wise: at(i,j) = m(i,j).
  static Tensor2 from_grid(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return g_[i * n_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return g_[i * n_ + j]; }
  const std::vector<Scalar>& entries() const { return g_; }
  Matrix grid() const;  // entry (i,j) = at(i,j)
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  std::string to_string() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b);
  friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

 private:
  void check(const Tensor2& o) const;
  Field field_;
  std::size_t n_ = 0;
  std::vector<Scalar> g_;
};

// sum_{ijk} at(i,j,k) e_i (x) e_j (x) e_k
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Field f, std::size_t n) : field_(f), n_(n), g_(n * n * n, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return g_[(i * n_ + j) * n_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return g_[(i * n_ + j) * n_ + k]; }
  const std::vector<Scalar>& entries() const { return g_; }
  bool is_zero() const;
  std::string to_string() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Scalar& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b);
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  void check(const Tensor3& o) const;
  Field field_;
  std::size_t n_ = 0;
  std::vector<Scalar> g_;
};

Tensor2 flip(const Tensor2& r);

// (x (x) y) -> (X x) (x) (Y y)
Tensor2 apply_each(const Tensor2& t, const Matrix& x, const Matrix& y);
// Apply m in one tensor slot (0, 1 or 2).
Tensor3 apply_slot(const Tensor3& t, std::size_t slot, const Matrix& m);
// Exchange two tensor slots, e.g. swap_slots(t, 0, 1) is (tau (x) id).
Tensor3 swap_slots(const Tensor3& t, std::size_t s1, std::size_t s2);

// For r = sum x_i (x) y_i and s = sum x'_j (x) y'_j, writing ab for the product
// and {a,b} = ab + ba:
enum class Contraction {
  C12_13,     // sum x_i x'_j (x) y_i (x) y'_j
  C12_23,     // sum x_i (x) y_i x'_j (x) y'_j
  C13_23,     // sum x_i (x) x'_j (x) y_i y'_j
  C13_12,     // sum x_i x'_j (x) y'_j (x) y_i
  C23_13,     // sum x'_j (x) x_i (x) y_i y'_j
  Star12_23,  // sum x_i (x) {y_i, x'_j} (x) y'_j
  Star13_23,  // sum x_i (x) x'_j (x) {y_i, y'_j}
};

Contraction parse_contraction(const std::string& name);
std::string contraction_name(Contraction c);
Tensor3 tensor3_combine(const Algebra& alg, const Tensor2& r, const Tensor2& s, Contraction kind);

}  // namespace nova
