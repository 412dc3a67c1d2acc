#pragma once

#include <utility>

#include "nova/algebra.hpp"

namespace nova {

// Weight, the two extension masses, and the tensor-equation mass.
struct MassParams {
  Scalar lambda, kappa, mu, epsilon;

  static MassParams zero(Field f) {
    return {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  }
  static MassParams of(Field f, long long lambda, long long kappa = 0, long long mu = 0,
                       long long epsilon = 0) {
    return {Scalar(f, lambda), Scalar(f, kappa), Scalar(f, mu), Scalar(f, epsilon)};
  }
};

// Maps M -> A are matrices with dim(A) rows and mdim columns.

// l(b(u))v - r(b(v))u on module basis pairs.
Residual balanced_residual(const BimodNov& ctx, const Matrix& beta, Eval mode = Eval::Full);
// kappa(x b(u) - b(l(x)u)) and kappa(b(u) x - b(r(x)u)); vanishes when kappa = 0.
Residual invariant_residual(const BimodNov& ctx, const Matrix& beta, const Scalar& kappa,
                            Eval mode = Eval::Full);
// Same identities without the kappa factor: b intertwines (l, r) with (L, R).
Residual homomorphism_residual(const BimodNov& ctx, const Matrix& beta, Eval mode = Eval::Full);
// mu(l(b(uv))w - (l(b(u))v)w) and mu(r(b(vw))u - u(r(b(w))v)); vanishes when mu = 0.
Residual equivalent_residual(const BimodNov& ctx, const Matrix& beta, const Scalar& mu,
                             Eval mode = Eval::Full);

// a(u)a(v) - a(l(a(u))v + r(a(v))u + lambda uv) - kappa b(u)b(v) - mu b(uv).
Residual ext_o_equation(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                        const MassParams& p, Eval mode = Eval::Full);

struct ExtOReport {
  Residual equation, balanced, invariant, equivalent;
  bool flag() const {
    return equation.zero() && balanced.zero() && invariant.zero() && equivalent.zero();
  }
  Residual combined() const;
};
// The operator equation together with the three side conditions on beta.
ExtOReport ext_o_residual(const BimodNov& ctx, const Matrix& alpha, const Matrix& beta,
                          const MassParams& p, Eval mode = Eval::Full);

// Plain operator equation of the given weight (beta = 0).
Residual o_operator_residual(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                             Eval mode = Eval::Full);
// Operator equation on the regular context of alg.
Residual rota_baxter_residual(const Algebra& alg, const Matrix& t, const Scalar& lambda,
                              Eval mode = Eval::Full);

// phi(u) phi(v) - phi(u v) for phi: (source) -> (target).
Residual homomorphism_identity(const Algebra& source, const Algebra& target, const Matrix& phi,
                               Eval mode = Eval::Full);

// u * v = l(a(u))v + r(a(v))u + lambda uv on M.
Algebra star_product(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda);
// The two conditions under which the product above is Novikov.
Residual star_conditions(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda,
                         Eval mode = Eval::Full);

struct DiamondProduct {
  Algebra product;
  Matrix alpha, beta;  // half-sum and half-difference of the two maps
};
// u <> v = l(d+(u))v + r(d-(v))u + lambda uv. Throws NoHalf in characteristic 2.
DiamondProduct diamond_product(const BimodNov& ctx, const Matrix& dplus, const Matrix& dminus,
                               const Scalar& lambda);

// u (.)+- v = lambda uv -+ 2 l(b(u))v, returned as {plus, minus}. Throws NoHalf in
// characteristic 2.
std::pair<Algebra, Algebra> pm_products(const BimodNov& ctx, const Matrix& beta,
                                        const Scalar& lambda);

// x oT y = T(x)y + xT(y) + lambda xy.
Algebra circ_T(const Algebra& alg, const Matrix& t, const Scalar& lambda);

// T(x)T(y) - T(T(x)y + xT(y) + lambda xy) - khat xy: the operator equation on the
// regular context with beta = id, where khat = kappa + mu.
Residual identity_extension_residual(const Algebra& alg, const Matrix& t, const Scalar& lambda,
                                     const Scalar& khat, Eval mode = Eval::Full);

}  // namespace nova
