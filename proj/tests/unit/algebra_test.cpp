#include <doctest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "nova/errors.hpp"
#include "nova/solver.hpp"

using namespace nova;

namespace {

naive::Alg2 to_naive(const Algebra& a) {
  naive::Alg2 n;
  n.p = a.field().p();
  for (std::size_t i = 0; i < 8; ++i) n.c[i] = a.constants()[i].residue();
  return n;
}

}  // namespace

TEST_CASE("the worked two-dimensional algebra is Novikov") {
  CHECK(is_novikov(fx::a2(fx::q())));
  CHECK(is_novikov(Algebra(fx::q(), 3)));
}

TEST_CASE("a non-Novikov table yields a witness triple") {
  const Field q = fx::q();
  Algebra a(q, 2);
  a.set_mul(0, 0, Vec::of(q, {0, 1}));
  a.set_mul(1, 1, Vec::of(q, {1, 0}));
  const Residual r = novikov_residual(a);
  REQUIRE_FALSE(r.zero());
  CHECK(r.witnesses().front().tuple.size() == 3);
}

TEST_CASE("Novikov residual agrees with the naive checker on random tables") {
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    Rng rng(11 * p);
    for (int t = 0; t < 400; ++t) {
      Algebra a(f, 2);
      for (std::size_t k = 0; k < 8; ++k) a.coeff(k / 4, (k / 2) % 2, k % 2) = rng.scalar(f);
      CHECK(is_novikov(a) == naive::novikov(to_naive(a)));
    }
  }
}

TEST_CASE("truncated polynomial family is Novikov") {
  for (std::size_t n : {2u, 3u, 4u}) CHECK(is_novikov(trunc_poly(fx::q(), n, Scalar(fx::q(), 3))));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance in = random_instance(seed, {Family::TruncPoly, Field::prime(5), 3, 1});
    CHECK(is_novikov(in.algebra));
  }
}

TEST_CASE("star product symmetrises") {
  const Algebra s = star(fx::a2(fx::q()));
  CHECK(s.mul(0, 0) == Vec::of(fx::q(), {2, 0}));
  CHECK(s.mul(0, 1) == Vec::of(fx::q(), {0, 2}));
  CHECK(s.mul(1, 0) == s.mul(0, 1));
}

TEST_CASE("regular and dual bimodules satisfy the action identities") {
  const Algebra a = fx::a2(fx::q());
  const Bimodule reg = Bimodule::regular(a);
  CHECK(bimodule_residual(reg).zero());
  const Bimodule dual = dual_bimodule(reg);
  CHECK(bimodule_residual(dual).zero());
  // l' = -l^T - r^T, r' = r^T
  CHECK(dual.l[0] == -(reg.l[0].transpose()) - reg.r[0].transpose());
  CHECK(dual.r[1] == reg.r[1].transpose());
  CHECK(bimodnov_residual(regular(a)).zero());
}

TEST_CASE("semidirect product of the regular context is a dim-4 Novikov algebra") {
  const Algebra a = fx::a2(fx::q());
  const Algebra sd = semidirect(regular(a));
  CHECK(sd.dim() == 4);
  CHECK(is_novikov(sd));
  // (e1, 0)(0, e1) = (0, l(e1)e1) = (0, e1)
  CHECK(sd.mul(0, 2) == Vec::of(fx::q(), {0, 0, 1, 0}));
}

TEST_CASE("a non-bimodule line action breaks the semidirect product") {
  const Field f = Field::prime(3);
  const Algebra a = fx::a2(f);
  Bimodule b = Bimodule::zero(a, 1);
  b.l[1] = Matrix::of(f, 1, 1, {1});  // l(e2) = 1 while e2 e2 = 0
  const bool module_ok = bimodule_residual(b).zero();
  CHECK(module_ok == is_novikov(semidirect(b)));
  CHECK_FALSE(module_ok);
  CHECK_THROWS_AS(dual_bimodule(b), NotABimodule);
  CHECK_THROWS_AS(abnova_residual(with_trivial_product(b)), NotABimodule);
}

TEST_CASE("regular() refuses non-Novikov algebras") {
  const Field q = fx::q();
  Algebra a(q, 2);
  a.set_mul(0, 0, Vec::of(q, {0, 1}));
  a.set_mul(1, 1, Vec::of(q, {1, 0}));
  CHECK_THROWS_AS(regular(a), NotNovikov);
}
