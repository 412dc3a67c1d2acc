#include <doctest.h>

#include "fixtures.hpp"
#include "nova/errors.hpp"
#include "nova/lift.hpp"
#include "nova/solver.hpp"

using namespace nova;

TEST_CASE("double of the regular bimodule is a dim-4 Novikov algebra") {
  const Field q = fx::q();
  const DoubleAlg d = double_algebra(fx::a2(q), Bimodule::regular(fx::a2(q)));
  CHECK(d.algebra.dim() == 4);
  CHECK(d.novikov.zero());
  CHECK(is_novikov(d.algebra));
}

TEST_CASE("lift of a map places it off the diagonal") {
  const Field q = fx::q();
  const DoubleAlg d = double_algebra(fx::a2(q), Bimodule::regular(fx::a2(q)));
  const LiftedMap l = lift_map(d, fx::t2(q));
  CHECK(l.map.rows() == 4);
  CHECK(l.minus == l.check - flip(l.check));
  CHECK(l.plus == l.check + flip(l.check));
  CHECK(l.minus_map == l.map - l.map.transpose());
  CHECK_THROWS_AS(lift_map(d, Matrix(q, 3, 2)), DimMismatch);
}

TEST_CASE("skew lifted tensor satisfies the generalized equations iff the map is a generalized operator") {
  const Field f = Field::prime(2);
  int disagreements = 0, positives = 0;
  for (const Algebra& a : novikov_algebras(f, 2)) {
    const DoubleAlg d = double_algebra(a, Bimodule::regular(a));
    for (std::uint64_t i = 0; i < 16; ++i) {
      const Matrix alpha = matrix_from_coeffs(f, 2, 2, decode(i, 4, 2));
      const bool tensor_side = gnybe_residuals(d.algebra, lift_map(d, alpha).minus).zero();
      const bool map_side = is_generalized_o(d.bimod, alpha);
      disagreements += tensor_side != map_side;
      positives += map_side;
    }
  }
  CHECK(disagreements == 0);
  CHECK(positives > 0);
}

TEST_CASE("the zero map is a generalized operator") {
  const Field q = fx::q();
  CHECK(is_generalized_o(Bimodule::regular(fx::a2(q)), Matrix(q, 2, 2)));
}
