#pragma once

#include <optional>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/tensor.hpp"

namespace nova {

// A (+) V* with the dual actions (-l^T - r^T, r^T) and zero product on V*.
// Basis: the n basis vectors of A, then the m dual basis vectors of V.
struct DoubleAlg {
  Algebra base;
  Bimodule bimod, dual;
  Algebra algebra;
  std::size_t n = 0, m = 0;
  Residual novikov;  // of the assembled algebra

  // Inclusion A -> double and projection double* = A* (+) V -> V.
  Matrix include_base() const;
  Matrix project_module() const;
};
// Throws NotABimodule.
DoubleAlg double_algebra(const Algebra& alg, const Bimodule& b);

// A map g: V -> A placed in the double: P = include . g . project, as a map from the
// dual of the double (A* then V) to the double.
struct LiftedMap {
  Matrix source;                  // g, n x m
  Matrix map;                     // P, (n+m) x (n+m)
  Tensor2 check;                  // tensor of P: sum v*_i (x) g(v_i)
  Tensor2 minus, plus;            // check -+ flip(check)
  Matrix minus_map, plus_map;     // P - P^T and P + P^T
};
// Throws DimMismatch.
LiftedMap lift_map(const DoubleAlg& d, const Matrix& g);

// Both generalized Yang-Baxter tensors for every basis element a, transcribed term by term.
struct GnybeResiduals {
  std::vector<Tensor3> first, second;  // indexed by basis element
  bool first_zero() const;
  bool second_zero() const;
  bool zero() const { return first_zero() && second_zero(); }
  Residual report(Eval mode = Eval::Full) const;
};
GnybeResiduals gnybe_residuals(const Algebra& alg, const Tensor2& r);

// (L(a) (x) id + id (x) L_star(a)) r.
Tensor2 delta_r(const Algebra& alg, const Tensor2& r, const Vec& a);

// Product on A* induced by delta_r, by closed form and by pairing with delta_r(e_x).
// The product on the dual basis is stored as an Algebra of dimension n.
struct CircDelta {
  Algebra closed, pairing;
  // Form through the skew part; present when 1/2 exists and the symmetric part is invariant.
  std::optional<Algebra> skew_form;
  Residual agreement;  // closed vs pairing, and closed vs skew_form when present
};
CircDelta circ_delta(const Algebra& alg, const Tensor2& r);

// The two extra equalities on (r + tau r) accompanying the generalized equations,
// evaluated on basis pairs (a, b) as "extra-1" and "extra-2".
Residual bialgebra_extra_residuals(const Algebra& alg, const Tensor2& r, Eval mode = Eval::Full);

// Obstruction to a weight-0 operator: B(u, v) = a(u)a(v) - a(l(a(u))v + r(a(v))u).
struct BAlpha {
  std::size_t mdim = 0;
  std::vector<Vec> values;  // values[u * mdim + v]
  const Vec& at(std::size_t u, std::size_t v) const { return values[u * mdim + v]; }
  Vec apply(const Vec& u, const Vec& v) const;
};
BAlpha b_alpha(const Bimodule& ctx, const Matrix& alpha);

// The two conditions for u*v = l(a(u))v + r(a(v))u to be Novikov ("vcon1", "vcon2") and
// the four conditions on B ("con3".."con6"), on basis tuples.
Residual generalized_o_residual(const Bimodule& ctx, const Matrix& alpha,
                                Eval mode = Eval::Full);
inline bool is_generalized_o(const Bimodule& ctx, const Matrix& alpha) {
  return generalized_o_residual(ctx, alpha, Eval::FailFast).zero();
}

// The same six families with B(u, v) replaced by lambda a(u.v) ("cor-a1".."cor-a6").
Residual goper_cor_residual(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                            Eval mode = Eval::Full);

}  // namespace nova
