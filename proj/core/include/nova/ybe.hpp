#pragma once

#include <optional>
#include <utility>

#include "nova/operators.hpp"
#include "nova/postnov.hpp"
#include "nova/tensor.hpp"

namespace nova {

// r as a map A* -> A, <hat(a*), b*> = <a* (x) b*, r>, together with the map of the flip.
// The dual basis is ordered as the primal basis.
struct HatPair {
  Matrix hat, hat_t;
};
HatPair hat(const Tensor2& r);
// Inverse of hat: the tensor whose map is p.
Tensor2 check_of(const Matrix& p);

// r with its skew and symmetric halves and their maps. Throws NoHalf in
// characteristic 2.
struct RTensor {
  Tensor2 r, skew, sym;
  Matrix hat, hat_t, alpha, beta;  // alpha = hat(skew), beta = hat(sym)
  explicit RTensor(const Tensor2& r);
};

// (A*, L*_star, -R*) with zero module product; not validated, so it can be formed for any
// algebra.
BimodNov dual_context(const Algebra& alg);

// (L(x) (x) id + id (x) L_star(x)) s = 0 for every basis x, with the two equivalent
// formulations on the dual context. For a symmetric s on a Novikov algebra all three
// agree.
struct InvarianceReport {
  bool symmetric = false;
  Residual tensor, balanced, homomorphism;
  bool invariant() const { return symmetric && tensor.zero(); }
  bool consistent() const {
    return tensor.zero() == balanced.zero() && tensor.zero() == homomorphism.zero();
  }
};
InvarianceReport invariance_residual(const Algebra& alg, const Tensor2& s,
                                     Eval mode = Eval::Full);
inline bool is_invariant(const Algebra& alg, const Tensor2& s) {
  return invariance_residual(alg, s, Eval::FailFast).invariant();
}

// r13 r23 + r12 * r23 + r13 r12.
Tensor3 nybe_residual(const Algebra& alg, const Tensor2& r);
// The left side above minus epsilon (r + tau r)13 (r + tau r)23.
Tensor3 enybe_residual(const Algebra& alg, const Tensor2& r, const Scalar& epsilon);
// Residual report of a Tensor3 listing each nonzero entry.
Residual tensor_report(const Tensor3& t, const char* name, Eval mode = Eval::Full);

// hat(a*) hat(b*) - hat(L*_star(hat a*) b* + R*(hat_t b*) a*) on dual basis pairs; its c-th
// coordinate equals the NYBE residual at (a, b, c).
Residual o_nybe_residual(const Algebra& alg, const Tensor2& r, Eval mode = Eval::Full);

// a* (.)+- b* = -+ 2 L*_star(beta a*) b*, returned as {plus, minus}. Throws
// SymPartNotInvariant.
std::pair<Algebra, Algebra> dual_pm_products(const Algebra& alg, const RTensor& r);

// a* * b* = L*_star(hat a*) b* + R*(hat_t b*) a*.
Algebra dual_star_product(const Algebra& alg, const Tensor2& r);

// The verdicts compared by the equivalence for tensors with invariant symmetric part.
struct TensorOperatorVerdicts {
  bool nybe = false;
  bool hat_operator = false;       // hat is weight-1 operator over (A*, (.)+)
  bool minus_hat_t_operator = false;  // -hat_t is weight-1 operator over (A*, (.)-)
  bool skew_extended = false;      // alpha extended with beta of mass (-1, 0)
  bool star_plus = false;          // (alpha + beta) intertwines * with the product
  bool star_minus = false;
  bool agree() const {
    return nybe == hat_operator && nybe == minus_hat_t_operator && nybe == skew_extended &&
           nybe == star_plus && nybe == star_minus;
  }
};
// Throws SymPartNotInvariant.
TensorOperatorVerdicts tensor_operator_verdicts(const Algebra& alg, const RTensor& r);

// Post-Novikov structure on A* from a NYBE solution with invariant symmetric part, and
// its push-forward to A when hat is invertible.
struct NybePost {
  PostNov dual;
  std::optional<PostNov> compatible;
  Residual associated_matches;  // associated algebra of the push-forward equals A
};
// Throws NotNYBESolution or SymPartNotInvariant.
NybePost post_from_nybe(const Algebra& alg, const Tensor2& r);

// Bilinear form B(a, b) = grid(a, b); as a map A -> A*, phi has the same matrix.
struct BilForm {
  Matrix grid;
  const Matrix& phi() const { return grid; }
  bool symmetric() const { return grid == grid.transpose(); }
  bool nondegenerate() const { return rank(grid) == grid.rows(); }
};
// B(a b, c) + B(b, a * c) on basis triples.
Residual bilform_invariance(const Algebra& alg, const BilForm& b, Eval mode = Eval::Full);
inline bool is_quadratic(const Algebra& alg, const BilForm& b) {
  return b.symmetric() && b.nondegenerate() && bilform_invariance(alg, b, Eval::FailFast).zero();
}
// B(Ta, b) - sign B(a, Tb), i.e. T^T G - sign G T, column by column.
Residual adjoint_residual(const BilForm& b, const Matrix& t, int sign, Eval mode = Eval::Full);

struct QuadTransport {
  Matrix p_t, p_beta;          // T phi^-1 and beta phi^-1
  Tensor2 delta_plus, delta_minus;  // tensors of p_t + p_beta and p_t - p_beta
  Residual quadratic;          // symmetry and invariance of B (hypotheses)
};
// Throws DegenerateForm or BetaNotSelfAdjoint.
QuadTransport quad_transport(const Algebra& alg, const BilForm& b, const Matrix& t,
                             const Matrix& beta);

}  // namespace nova
