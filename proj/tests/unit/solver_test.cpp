#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "naive.hpp"
#include "nova/errors.hpp"
#include "nova/solver.hpp"

using namespace nova;

namespace {

SearchSpec novikov_spec(std::uint32_t p) {
  SearchSpec s;
  s.kind = SearchKind::NovikovAlgebra;
  s.field = Field::prime(p);
  s.dim = 2;
  s.masses = MassParams::zero(s.field);
  return s;
}

SearchSpec over_a2(SearchKind k, long long lambda = 0, long long eps = 0) {
  SearchSpec s;
  s.kind = k;
  s.field = Field::prime(3);
  s.algebra = fx::a2(s.field);
  s.masses = MassParams::of(s.field, lambda, 0, 0, eps);
  return s;
}

naive::Alg2 a2_naive() {
  naive::Alg2 n;
  n.p = 3;
  n.c = {1, 0, 0, 1, 0, 1, 0, 0};
  return n;
}

}  // namespace

TEST_CASE("dim-2 Novikov counts match the naive enumeration") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const SearchResult r = enumerate(novikov_spec(p));
    CHECK(r.solutions.size() == naive::all_novikov(p).size());
    CHECK(novikov_algebras(Field::prime(p), 2).size() == r.solutions.size());
  }
}

TEST_CASE("tensor and operator counts on A2 over F3 match the naive transcription") {
  const naive::Alg2 a = a2_naive();
  std::size_t nybe = 0, enybe = 0, rb_minus = 0, rb_zero = 0;
  for (long idx = 0; idx < 81; ++idx) {
    const std::array<std::array<long, 2>, 2> g{{{idx / 27 % 3, idx / 9 % 3}, {idx / 3 % 3, idx % 3}}};
    auto zero = [](const std::array<long, 8>& t) {
      for (long x : t)
        if (x) return false;
      return true;
    };
    nybe += zero(naive::nybe(a, g));
    enybe += zero(naive::nybe(a, g, 1));
    rb_minus += naive::rota_baxter(a, g, -1);
    rb_zero += naive::rota_baxter(a, g, 0);
  }
  CHECK(enumerate(over_a2(SearchKind::NybeSolution)).solutions.size() == nybe);
  CHECK(enumerate(over_a2(SearchKind::EnybeSolution, 0, 1)).solutions.size() == enybe);
  CHECK(enumerate(over_a2(SearchKind::RotaBaxter, -1)).solutions.size() == rb_minus);
  CHECK(enumerate(over_a2(SearchKind::RotaBaxter, 0)).solutions.size() == rb_zero);
}

TEST_CASE("every solution re-verifies and the identity is a weight -1 solution") {
  const SearchSpec s = over_a2(SearchKind::RotaBaxter, -1);
  const SearchResult r = enumerate(s);
  bool has_identity = false;
  for (const Solution& sol : r.solutions) {
    CHECK(verify_solution(s, sol));
    has_identity = has_identity || matrix_from_coeffs(s.field, 2, 2, sol.coeffs) == Matrix::identity(s.field, 2);
  }
  CHECK(has_identity);
}

TEST_CASE("shards partition the search and threads do not change it") {
  SearchSpec s = novikov_spec(3);
  const SearchResult whole = enumerate(s);
  std::set<std::uint64_t> seen;
  std::uint64_t candidates = 0;
  s.shards = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    s.shard = i;
    const SearchResult part = enumerate(s, 2);
    candidates += part.candidates;
    for (const Solution& sol : part.solutions) CHECK(seen.insert(sol.index).second);
  }
  CHECK(candidates == whole.total);
  CHECK(seen.size() == whole.solutions.size());
  s.shards = 1;
  s.shard = 0;
  CHECK(enumerate(s, 4).hash == whole.hash);
  CHECK(context_hash(s) == context_hash(novikov_spec(3)));
}

TEST_CASE("decode is most-significant first") {
  CHECK(decode(28, 4, 3) == std::vector<std::uint32_t>{1, 0, 0, 1});
}

TEST_CASE("oversized spaces are refused") {
  SearchSpec s = novikov_spec(7);
  s.dim = 3;
  CHECK_THROWS_AS(space_size(s), SpaceTooLarge);
}

TEST_CASE("random instances are reproducible") {
  const InstanceRequest req{Family::RandomMaps, Field::prime(5), 3, 2};
  const Instance a = random_instance(9, req), b = random_instance(9, req);
  REQUIRE(a.maps.size() == 2);
  CHECK(a.maps == b.maps);
  const InstanceRequest en{Family::EnumeratedDim2, Field::prime(2), 2, 1};
  CHECK(random_instance(3, en).algebra == novikov_algebras(Field::prime(2), 2)[3]);
}
