#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nova/linalg.hpp"
#include "nova/residual.hpp"

namespace nova {

// Bilinear product on a based space, stored as structure constants:
// e_i * e_j = sum_k coeff(i, j, k) e_k.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Field f, std::size_t dim);  // zero product
  // table[i][j] = coordinates of e_i * e_j
  static Algebra from_table(Field f, std::size_t dim, const std::vector<std::vector<Vec>>& table);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const { return c_; }

  Vec mul(std::size_t i, std::size_t j) const;
  void set_mul(std::size_t i, std::size_t j, const Vec& v);
  Vec product(const Vec& a, const Vec& b) const;

  // Left and right multiplication by a, and their sum.
  Matrix left(const Vec& a) const;
  Matrix right(const Vec& a) const;
  Matrix left_star(const Vec& a) const { return left(a) + right(a); }
  Matrix left_basis(std::size_t i) const;
  Matrix right_basis(std::size_t i) const;

  Vec basis(std::size_t i) const { return Vec::basis(field_, dim_, i); }
  Vec zero_vec() const { return Vec(field_, dim_); }

  std::vector<std::string> labels;  // optional basis names

  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

struct LRMatrices {
  Matrix left, right, left_star;
};
LRMatrices lr_matrices(const Algebra& alg, const Vec& a);

// Symmetrised product a*b + b*a.
Algebra star(const Algebra& alg);

// Left-symmetry of associators and right-commutativity on all basis triples.
Residual novikov_residual(const Algebra& alg, Eval mode = Eval::Full);
inline bool is_novikov(const Algebra& alg) {
  return novikov_residual(alg, Eval::FailFast).zero();
}

// Pair of actions l, r of an algebra on a module space, stored on basis elements.
struct Bimodule {
  Algebra base;
  std::size_t mdim = 0;
  std::vector<Matrix> l, r;  // l[i] = l(e_i), each mdim x mdim

  static Bimodule zero(const Algebra& base, std::size_t mdim);
  static Bimodule regular(const Algebra& base);

  const Field& field() const { return base.field(); }
  Matrix l_of(const Vec& a) const;
  Matrix r_of(const Vec& a) const;
  Vec module_basis(std::size_t i) const { return Vec::basis(field(), mdim, i); }
  Vec module_zero() const { return Vec(field(), mdim); }
};

// Bimodule whose module space carries its own product.
struct BimodNov {
  Bimodule bimod;
  Algebra product;  // on the module space, dim == bimod.mdim

  const Algebra& base() const { return bimod.base; }
  const Field& field() const { return bimod.field(); }
  std::size_t dim() const { return bimod.base.dim(); }
  std::size_t mdim() const { return bimod.mdim; }
};

// The four action identities on (a, b, v).
Residual bimodule_residual(const Bimodule& b, Eval mode = Eval::Full);
// The four product-compatibility identities on (a, v, w). Throws NotABimodule or
// ModuleNotNovikov if the preconditions fail.
Residual abnova_residual(const BimodNov& b, Eval mode = Eval::Full);
// Everything required of a bimodule Novikov algebra in one report, never throws:
// action identities, Novikov identities of the module product, compatibility.
Residual bimodnov_residual(const BimodNov& b, Eval mode = Eval::Full);

// Dual module with l' = -l^T - r^T and r' = r^T. Throws NotABimodule when validate is set
// and b is not a bimodule.
Bimodule dual_bimodule(const Bimodule& b, bool validate = true);
// Structure constants of (a+u)(b+v) = ab + l(a)v + r(b)u + uv on A (+) M.
Algebra semidirect(const BimodNov& b);
Algebra semidirect(const Bimodule& b);  // trivial module product
// (A, product, L, R). Throws NotNovikov when validate is set and A is not Novikov.
BimodNov regular(const Algebra& alg, bool validate = true);
// Module with the given actions and zero product.
BimodNov with_trivial_product(const Bimodule& b);

}  // namespace nova
