#include <doctest.h>

#include "nova/errors.hpp"
#include "nova/linalg.hpp"
#include "nova/solver.hpp"

using namespace nova;

TEST_CASE("prime field arithmetic reduces and inverts") {
  const Field f = Field::prime(7);
  const Scalar a(f, 10), b(f, -4);
  CHECK(a.residue() == 3);
  CHECK(b.residue() == 3);
  CHECK((a * a.inverse()).is_one());
  CHECK((Scalar(f, 3) / Scalar(f, 5)).residue() == 2);  // 5 * 2 = 10 = 3
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), DivisionByZero);
  CHECK(Scalar::parse(f, "1/2").residue() == 4);
}

TEST_CASE("rational scalars stay exact") {
  const Field q = Field::rational();
  const Scalar third = Scalar::parse(q, "1/3");
  CHECK((third + third + third).is_one());
  CHECK(Scalar::parse(q, "-6/4") == Scalar::parse(q, "-3/2"));
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
  CHECK_THROWS_AS(Scalar(q, 1) + Scalar(Field::prime(3), 1), FieldMismatch);
}

TEST_CASE("field names parse") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F5").p() == 5);
  CHECK(Field::parse("f3").p() == 3);
  CHECK_THROWS_AS(Field::parse("F4"), ParseError);
}

TEST_CASE("kernel, inverse and solve satisfy their defining equations") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    Rng rng(p);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix m = rng.matrix(f, 3, 4);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() + rank(m) == 4);
      for (const Vec& v : ker) CHECK(m.apply(v).is_zero());
      const Matrix sq = rng.matrix(f, 3, 3);
      if (auto inv = inverse(sq)) {
        CHECK(rank(sq) == 3);
        CHECK(*inv * sq == Matrix::identity(f, 3));
      } else {
        CHECK(rank(sq) < 3);
      }
      const Vec b = m.apply(Vec::of(f, {1, 2, 0, 1}));
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == b);
    }
  }
}

TEST_CASE("rref normalises pivots") {
  const Field q = Field::rational();
  const Echelon e = rref(Matrix::of(q, 2, 3, {2, 4, 6, 1, 3, 5}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == Matrix::of(q, 2, 3, {1, 0, -1, 0, 1, 2}));
}

TEST_CASE("matrix products check shapes") {
  const Field q = Field::rational();
  CHECK_THROWS_AS(Matrix(q, 2, 3) * Matrix(q, 2, 3), DimMismatch);
  const Matrix a = Matrix::of(q, 2, 2, {1, 2, 3, 4});
  CHECK(a.apply(Vec::of(q, {1, 0})) == Vec::of(q, {1, 3}));  // column 0 is the image of e1
}
