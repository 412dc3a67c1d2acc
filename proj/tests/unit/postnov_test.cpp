#include <doctest.h>

#include "fixtures.hpp"
#include "nova/errors.hpp"
#include "nova/postnov.hpp"

using namespace nova;

namespace {

// k[x]/(x^3) with the ordinary product.
Algebra truncated_ring(Field f) {
  Algebra a(f, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; i + j < 3; ++j) a.set_mul(i, j, Vec::basis(f, 3, i + j));
  return a;
}

}  // namespace

TEST_CASE("the identity at weight -1 gives a post-Novikov structure") {
  const Field q = fx::q();
  const Algebra a = fx::a2(q);
  const PostNov p = post_from_rb(a, Matrix::identity(q, 2), Scalar(q, -1));
  CHECK(is_post_novikov(p));
  // x (.) y = -xy, x |> y = xy, x <| y = xy: the associated product is xy again.
  CHECK(associated(p) == a);
  CHECK(bimodnov_residual(lr_bimodule(p)).zero());
}

TEST_CASE("post_from_rb refuses a non-Rota-Baxter map") {
  const Field q = fx::q();
  CHECK_THROWS_AS(post_from_rb(fx::a2(q), fx::t2(q), Scalar(q, 0)), NotRotaBaxter);
}

TEST_CASE("trialgebra with the Euler derivation") {
  const Field q = fx::q();
  const Algebra dot = truncated_ring(q);
  Algebra circ(q, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) circ.set_mul(i, j, -dot.mul(i, j));
  Matrix d(q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) d.at(i, i) = Scalar(q, static_cast<long long>(i));
  const CommTrialgebra t{dot, circ, d};
  CHECK(trialgebra_residual(t).zero());
  CHECK(derivation_residual(t).zero());
  const PostNov p = post_from_trialgebra(t);
  CHECK(is_post_novikov(p));
  // a (.) b = a.D(b): x (.) x = x . x = x^2
  CHECK(p.circ.mul(1, 1) == Vec::of(q, {0, 0, 1}));
  CHECK(is_novikov(associated(p)));
}

TEST_CASE("a non-derivation is refused") {
  const Field q = fx::q();
  const Algebra dot = truncated_ring(q);
  const CommTrialgebra t{dot, Algebra(q, 3), Matrix::identity(q, 3)};
  CHECK_FALSE(derivation_residual(t).zero());
  CHECK_THROWS_AS(post_from_trialgebra(t), NotDerivation);
}

TEST_CASE("invertible Rota-Baxter map gives a compatible structure") {
  const Field f = Field::prime(5);
  const Algebra a = fx::a2(f);
  const CompatiblePost c = post_from_rb_invertible(a, Matrix::identity(f, 2), Scalar(f, -1));
  CHECK(is_post_novikov(c.post));
  CHECK(c.associated_matches.zero());
}

TEST_CASE("push-forward along an invertible map preserves validity") {
  const Field q = fx::q();
  const PostNov p = post_from_rb(fx::a2(q), Matrix::identity(q, 2), Scalar(q, -1));
  const PostNov moved = push_forward(p, Matrix::of(q, 2, 2, {1, 1, 0, 1}));
  CHECK(is_post_novikov(moved));
  CHECK_THROWS_AS(push_forward(p, Matrix::of(q, 2, 2, {1, 1, 1, 1})), SingularT);
}
