#include <doctest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/solver.hpp"
#include "nova/ybe.hpp"

using namespace nova;

TEST_CASE("nybe on e2 (x) e2 vanishes") {
  const Field q = fx::q();
  CHECK(nybe_residual(fx::a2(q), Tensor2::of(q, 2, {0, 0, 0, 1})).is_zero());
}

TEST_CASE("nybe on the skew tensor matches the hand expansion") {
  const Field q = fx::q();
  // r = e1 (x) e2 - e2 (x) e1: residual 2 e1e2e2 - 4 e2e1e2 + 2 e2e2e1
  const Tensor3 t = nybe_residual(fx::a2(q), Tensor2::of(q, 2, {0, 1, -1, 0}));
  Tensor3 expect(q, 2);
  expect.at(0, 1, 1) = Scalar(q, 2);
  expect.at(1, 0, 1) = Scalar(q, -4);
  expect.at(1, 1, 0) = Scalar(q, 2);
  CHECK(t == expect);
}

TEST_CASE("nybe and enybe agree with the naive expansion over F3") {
  const Field f = Field::prime(3);
  for (const naive::Alg2& n : naive::all_novikov(3)) {
    Algebra a(f, 2);
    for (std::size_t i = 0; i < 8; ++i) a.coeff(i / 4, (i / 2) % 2, i % 2) = Scalar(f, n.c[i]);
    for (int idx = 0; idx < 81; idx += 7) {
      std::array<std::array<long, 2>, 2> g{{{idx / 27 % 3, idx / 9 % 3}, {idx / 3 % 3, idx % 3}}};
      const Tensor2 r = Tensor2::of(f, 2, {g[0][0], g[0][1], g[1][0], g[1][1]});
      const auto expect = naive::nybe(n, g);
      const auto expect_e = naive::nybe(n, g, 2);
      const Tensor3 got = nybe_residual(a, r), got_e = enybe_residual(a, r, Scalar(f, 2));
      for (std::size_t k = 0; k < 8; ++k) {
        CHECK(got.entries()[k].residue() == expect[k]);
        CHECK(got_e.entries()[k].residue() == expect_e[k]);
      }
    }
  }
}

TEST_CASE("hat and check are inverse") {
  const Field q = fx::q();
  const Tensor2 r = Tensor2::of(q, 2, {1, 2, 3, 4});
  const HatPair h = hat(r);
  CHECK(check_of(h.hat) == r);
  CHECK(h.hat_t == hat(flip(r)).hat);
}

TEST_CASE("worked example: e2* o e2* = 3 e1* for r = e2 (x) e2") {
  const Field q = fx::q();
  const CircDelta cd = circ_delta(fx::a2(q), Tensor2::of(q, 2, {0, 0, 0, 1}));
  CHECK(cd.closed.mul(1, 1) == Vec::of(q, {3, 0}));
  CHECK(cd.closed == cd.pairing);
  CHECK(cd.agreement.zero());
}

TEST_CASE("o-nybe flag tracks the nybe residual on A2 over F3") {
  const Field f = Field::prime(3);
  const Algebra a = fx::a2(f);
  for (std::uint64_t i = 0; i < 81; ++i) {
    const Tensor2 r = tensor_from_coeffs(f, 2, decode(i, 4, 3));
    CHECK(nybe_residual(a, r).is_zero() == o_nybe_residual(a, r).zero());
  }
}

TEST_CASE("invariance formulations agree on symmetric tensors") {
  const Field f = Field::prime(5);
  Rng rng(3);
  for (const Algebra& a : novikov_algebras(f, 2)) {
    Tensor2 s = rng.tensor(f, 2);
    s = s + flip(s);
    const InvarianceReport rep = invariance_residual(a, s);
    CHECK(rep.symmetric);
    CHECK(rep.consistent());
  }
}

TEST_CASE("bilinear form invariance") {
  const Field q = fx::q();
  const Algebra zero(q, 2);
  const BilForm id{Matrix::identity(q, 2)};
  CHECK(is_quadratic(zero, id));
  CHECK_FALSE(is_quadratic(fx::a2(q), id));
  CHECK(adjoint_residual(id, Matrix::of(q, 2, 2, {0, 1, -1, 0}), -1).zero());
  CHECK_THROWS_AS(quad_transport(zero, BilForm{Matrix(q, 2, 2)}, Matrix(q, 2, 2), Matrix(q, 2, 2)),
                  DegenerateForm);
}

TEST_CASE("delta_r of e2 (x) e2") {
  const Field q = fx::q();
  // (L(e1) (x) id + id (x) L_star(e1)) e2 (x) e2 = e2 (x) e2 + 2 e2 (x) e2
  CHECK(delta_r(fx::a2(q), Tensor2::of(q, 2, {0, 0, 0, 1}), Vec::of(q, {1, 0})) ==
        Tensor2::of(q, 2, {0, 0, 0, 3}));
}
