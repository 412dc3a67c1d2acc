#pragma once

#include "nova/algebra.hpp"
#include "nova/operators.hpp"

namespace nova {

// Three products on one space: a Novikov product (called "circ" here and written
// (.) in comments when it lives on a module), a right operation tri_l (a <| b) and a
// left operation tri_r (a |> b).
struct PostNov {
  Algebra circ, tri_l, tri_r;

  const Field& field() const { return circ.field(); }
  std::size_t dim() const { return circ.dim(); }
  static PostNov zero(Field f, std::size_t dim) {
    return {Algebra(f, dim), Algebra(f, dim), Algebra(f, dim)};
  }
  friend bool operator==(const PostNov& a, const PostNov& b) {
    return a.circ == b.circ && a.tri_l == b.tri_l && a.tri_r == b.tri_r;
  }
};

// Novikov identities of circ (prefixed "circ ") and the eight compatibility identities,
// named nd1..nd4 and post7..post10.
Residual post_residual(const PostNov& p, Eval mode = Eval::Full);
inline bool is_post_novikov(const PostNov& p) {
  return post_residual(p, Eval::FailFast).zero();
}

// a (*) b = a |> b + a <| b + a circ b.
Algebra associated(const PostNov& p);

// (circ, L|>, R<|) as a bimodule Novikov algebra over the associated algebra.
// Throws NotPostNovikov.
BimodNov lr_bimodule(const PostNov& p);

// Commutative associative dot, a second product circ, and a derivation.
struct CommTrialgebra {
  Algebra dot, circ;
  Matrix derivation;
};
// Commutativity and associativity of dot and the four mixed identities.
Residual trialgebra_residual(const CommTrialgebra& t, Eval mode = Eval::Full);
// D(xy) = D(x)y + xD(y) for both products.
Residual derivation_residual(const CommTrialgebra& t, Eval mode = Eval::Full);
// circ = a.D(b), a <| b = a circ D(b), a |> b = D(b) circ a.
// Throws NotTrialgebra or NotDerivation.
PostNov post_from_trialgebra(const CommTrialgebra& t);

// Structure on M from an operator of weight lambda: u (.) v = lambda u.v,
// u |> v = l(a(u))v, u <| v = r(a(v))u. The homomorphism report checks that alpha maps the
// associated algebra of the result into A.
struct OperatorPost {
  PostNov post;
  Residual homomorphism;
};
// Throws NotOOperator.
OperatorPost post_from_o(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda);

// Structure pushed onto the image of alpha.
struct ImagePost {
  PostNov post;                        // in the basis below
  Matrix basis;                        // dim(A) x rank; columns are alpha(e_p) for pivots p
  std::vector<std::size_t> preimages;  // the pivot columns p
  // Recomputing each product with kernel vectors added to the preimages.
  Residual preimage_independence;
  // alpha is a post-Novikov homomorphism from post_from_o onto the image structure.
  Residual homomorphism;
};
// Throws NotOOperator or KernelNotIdeal.
ImagePost post_on_image(const BimodNov& ctx, const Matrix& alpha, const Scalar& lambda);

// Transport of all three products along an invertible map: x op' y = iso(iso^-1 x op iso^-1 y).
// Throws SingularT.
PostNov push_forward(const PostNov& p, const Matrix& iso);

// x (.) y = lambda xy, x |> y = T(x)y, x <| y = xT(y). Throws NotRotaBaxter.
PostNov post_from_rb(const Algebra& alg, const Matrix& t, const Scalar& lambda);

// For invertible T: x (.) y = lambda T(T^-1 x T^-1 y), x |> y = T(x T^-1 y),
// x <| y = T(T^-1 x y). The residual compares its associated algebra with alg.
struct CompatiblePost {
  PostNov post;
  Residual associated_matches;
};
// Throws NotRotaBaxter or SingularT.
CompatiblePost post_from_rb_invertible(const Algebra& alg, const Matrix& t,
                                       const Scalar& lambda);

}  // namespace nova
