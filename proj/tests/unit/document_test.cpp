#include <doctest.h>

#include "fixtures.hpp"
#include "nova/cli/document.hpp"
#include "nova/errors.hpp"
#include "nova/solver.hpp"

using namespace nova;
using namespace nova::cli;

namespace {

Json reparse(const Json& j) { return parse_document(j.dump()); }

}  // namespace

TEST_CASE("every document kind round-trips") {
  for (const Field f : {Field::rational(), Field::prime(5)}) {
    Rng rng(f.p() + 1);
    const Algebra a = fx::a2(f);
    CHECK(algebra_from(reparse(document(a))) == a);
    const Bimodule b = Bimodule::regular(a);
    const Bimodule b2 = bimodule_from(reparse(document(b)));
    CHECK(b2.base == a);
    CHECK(b2.l == b.l);
    CHECK(b2.r == b.r);
    const BimodNov n = regular(a);
    const BimodNov n2 = bimodnov_from(reparse(document(n)));
    CHECK(n2.product == n.product);
    CHECK(n2.bimod.l == n.bimod.l);
    const Matrix m = rng.matrix(f, 2, 3);
    CHECK(linmap_from(reparse(document(m))) == m);
    const Tensor2 t = rng.tensor(f, 3);
    CHECK(tensor2_from(reparse(document(t))) == t);
    const PostNov p{a, Algebra(f, 2), star(a)};
    CHECK(postnov_from(reparse(document(p))) == p);
    const BilForm g{rng.matrix(f, 2, 2)};
    CHECK(bilform_from(reparse(document(g))).grid == g.grid);
    const Json bun = reparse(bundle(f, {{"x", document(m)}}));
    CHECK(linmap_from(bundle_item(bun, "x")) == m);
  }
}

TEST_CASE("rational scalars serialise as strings, prime ones as integers") {
  const Field q = Field::rational();
  CHECK(scalar_json(Scalar::parse(q, "-3/2")) == "-3/2");
  CHECK(scalar_json(Scalar(Field::prime(7), 9)) == 2);
  CHECK(scalar_from(q, 4) == Scalar(q, 4));
  CHECK(scalar_from(q, "1/3") == Scalar::parse(q, "1/3"));
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format": 2, "kind": "algebra", "field": "Q"})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format": 1, "kind": "sheaf", "field": "Q"})"), ParseError);
  const Json bad = parse_document(R"({"format": 1, "kind": "algebra", "field": "Q", "dim": 2,
                                      "mul": [[[1, 0]], [[0, 1]]]})");
  CHECK_THROWS_AS(algebra_from(bad), ParseError);
  const Json lin = parse_document(R"({"format": 1, "kind": "linmap", "field": "Q", "rows": 1,
                                      "cols": 1, "matrix": [[1]]})");
  CHECK_THROWS_AS(algebra_from(lin), ParseError);
}

TEST_CASE("the documented A2 layout reads as e1 e1 = e1, e1 e2 = e2") {
  const Json j = parse_document(R"({"format": 1, "kind": "algebra", "field": {"kind": "prime", "p": 3},
    "dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]})");
  CHECK(algebra_from(j) == fx::a2(Field::prime(3)));
}
