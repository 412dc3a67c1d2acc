#include <doctest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "nova/errors.hpp"
#include "nova/operators.hpp"
#include "nova/solver.hpp"

using namespace nova;

TEST_CASE("worked example: T is an extended operator of weight 1, kappa -2") {
  const Field q = fx::q();
  const Algebra a = fx::a2(q);
  const ExtOReport rep = ext_o_residual(regular(a), fx::t2(q), fx::beta2(q), MassParams::of(q, 1, -2, 0));
  CHECK(rep.flag());
  CHECK(rep.combined().zero());
  // The same maps fail at another mass.
  CHECK_FALSE(ext_o_residual(regular(a), fx::t2(q), fx::beta2(q), MassParams::of(q, 1, -1, 0)).flag());
}

TEST_CASE("worked example: beta is balanced and invariant") {
  const Field q = fx::q();
  const BimodNov ctx = regular(fx::a2(q));
  CHECK(balanced_residual(ctx, fx::beta2(q)).zero());
  CHECK(invariant_residual(ctx, fx::beta2(q), Scalar(q, -2)).zero());
  CHECK(homomorphism_residual(ctx, fx::beta2(q)).zero());
}

TEST_CASE("worked example: the T-product") {
  const Field q = fx::q();
  const Algebra c = circ_T(fx::a2(q), fx::t2(q), Scalar(q, 1));
  CHECK(c.mul(0, 0) == Vec::of(q, {-3, 8}));
  CHECK(c.mul(0, 1).is_zero());
  CHECK(c.mul(1, 0).is_zero());
  CHECK(c.mul(1, 1).is_zero());
  CHECK(is_novikov(c));
}

TEST_CASE("worked example: the sign-twisted products") {
  const Field q = fx::q();
  const auto [plus, minus] = pm_products(regular(fx::a2(q)), fx::beta2(q), Scalar(q, 1));
  // e1 o+- e1 = e1 -+ 2(e1 + 3e2), e1 o+- e2 = e2 o+- e1 = e2 -+ 2e2
  CHECK(plus.mul(0, 0) == Vec::of(q, {-1, -6}));
  CHECK(minus.mul(0, 0) == Vec::of(q, {3, 6}));
  CHECK(plus.mul(0, 1) == Vec::of(q, {0, -1}));
  CHECK(minus.mul(1, 0) == Vec::of(q, {0, 3}));
  CHECK(plus.mul(1, 1).is_zero());
  CHECK(is_novikov(plus));
  CHECK(is_novikov(minus));
}

TEST_CASE("sign-twisted products need one half") {
  const Field f = Field::prime(2);
  CHECK_THROWS_AS(pm_products(regular(fx::a2(f)), fx::beta2(f), Scalar(f, 1)), NoHalf);
  CHECK_THROWS_AS(diamond_product(regular(fx::a2(f)), fx::t2(f), fx::t2(f), Scalar(f, 1)), NoHalf);
}

TEST_CASE("identity-extended equation agrees with the naive transcription") {
  for (std::uint32_t p : {3u, 5u}) {
    const Field f = Field::prime(p);
    const Algebra a = fx::a2(f);
    naive::Alg2 n;
    n.p = p;
    for (std::size_t i = 0; i < 8; ++i) n.c[i] = a.constants()[i].residue();
    Rng rng(p);
    int agree = 0;
    for (int t = 0; t < 300; ++t) {
      const Matrix m = rng.matrix(f, 2, 2);
      const long lambda = static_cast<long>(rng.next(p)), khat = static_cast<long>(rng.next(p));
      const std::array<std::array<long, 2>, 2> grid{{{(long)m.at(0, 0).residue(), (long)m.at(0, 1).residue()},
                                                     {(long)m.at(1, 0).residue(), (long)m.at(1, 1).residue()}}};
      const bool lib = identity_extension_residual(a, m, Scalar(f, lambda), Scalar(f, khat)).zero();
      agree += lib == naive::rota_baxter(n, grid, lambda, khat);
    }
    CHECK(agree == 300);
  }
}

TEST_CASE("identity is a Rota-Baxter operator of weight -1") {
  const Field q = fx::q();
  CHECK(rota_baxter_residual(fx::a2(q), Matrix::identity(q, 2), Scalar(q, -1)).zero());
  CHECK_FALSE(rota_baxter_residual(fx::a2(q), Matrix::identity(q, 2), Scalar(q, 0)).zero());
}

TEST_CASE("star product of a weight-0 operator is Novikov when the conditions hold") {
  const Field q = fx::q();
  const BimodNov ctx = regular(fx::a2(q));
  const Matrix zero(q, 2, 2);
  CHECK(star_conditions(ctx, zero, Scalar(q, 1)).zero());
  CHECK(star_product(ctx, zero, Scalar(q, 1)) == fx::a2(q));
}

TEST_CASE("shape mismatches are reported") {
  const Field q = fx::q();
  CHECK_THROWS_AS(ext_o_residual(regular(fx::a2(q)), Matrix(q, 3, 3), fx::beta2(q), MassParams::zero(q)),
                  DimMismatch);
}
