#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "luinv/counting.hpp"
#include "luinv/perm.hpp"
#include "oracle.hpp"

using namespace luinv;

namespace {

PermTuple tuple_1l(std::initializer_list<std::vector<int>> perms) {
  std::vector<Permutation> slots;
  for (const auto& p : perms) slots.push_back(Permutation::from_one_line(p));
  return PermTuple(std::move(slots));
}

}  // namespace

TEST_CASE("compose and inverse") {
  const auto swap2 = Permutation::from_one_line({2, 1});
  CHECK(compose(swap2, swap2) == Permutation::identity(2));

  const auto cycle = Permutation::from_one_line({3, 1, 2});
  CHECK(compose(Permutation::identity(3), cycle) == cycle);

  const auto c231 = Permutation::from_one_line({2, 3, 1});
  CHECK(compose(c231, c231).one_line() == std::vector<int>{3, 1, 2});

  CHECK(Permutation::from_one_line({1, 2}).inverse().one_line() == std::vector<int>{1, 2});
  CHECK(swap2.inverse() == swap2);
  CHECK(c231.inverse().one_line() == std::vector<int>{3, 1, 2});
  CHECK(compose(c231, c231.inverse()) == Permutation::identity(3));

  CHECK_THROWS_AS(compose(swap2, cycle), ShapeError);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), ParseError);
}

TEST_CASE("conjugation") {
  const auto t = tuple_1l({{2, 1}, {1, 2}});
  CHECK(conjugate(t, Permutation::identity(2)) == t);
  // S_2 is abelian, so conjugation never moves anything.
  CHECK(conjugate(t, Permutation::from_one_line({2, 1})) == t);

  const auto three = tuple_1l({{2, 3, 1}});
  const auto swapped = conjugate(three, Permutation::from_one_line({2, 1, 3}));
  CHECK(swapped.slot(0).one_line() == std::vector<int>{3, 1, 2});

  CHECK_THROWS_AS(conjugate(three, Permutation::identity(2)), ShapeError);
}

TEST_CASE("canonical form basics") {
  const auto single = tuple_1l({{1}, {1}});
  auto res = canonical_form(single);
  CHECK(res.key.tuple() == single);
  CHECK(res.witness == Permutation::identity(1));

  // Every 3-cycle lands on (2,3,1).
  for (const auto& rep : {std::vector<int>{2, 3, 1}, std::vector<int>{3, 1, 2}}) {
    auto key = canonical_form(tuple_1l({rep})).key;
    CHECK(key.tuple().slot(0).one_line() == std::vector<int>{2, 3, 1});
  }

  const auto frozen = tuple_1l({{2, 1}, {1, 2}});
  CHECK(canonical_form(frozen).key.tuple() == frozen);
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int arity = 1 + static_cast<int>(rng() % 3);
    const auto t = oracle::random_tuple(m, arity, rng);
    const auto res = canonical_form(t);
    CHECK(conjugate(t, res.witness) == res.key.tuple());
    CHECK(res.key.tuple() <= t);

    const auto pi = oracle::random_permutation(m, rng);
    CHECK(canonical_form(conjugate(t, pi)).key == res.key);
    CHECK(canonical_form(res.key.tuple()).key == res.key);
  }
}

TEST_CASE("star product") {
  const auto swap2 = tuple_1l({{2, 1}});
  CHECK(star(swap2, swap2).slot(0).one_line() == std::vector<int>{2, 1, 4, 3});

  // Joining with a fixed point extends every slot by one fixed point.
  const auto t = tuple_1l({{2, 1}, {1, 2}});
  const auto ext = star(t, tuple_1l({{1}, {1}}));
  CHECK(ext.slot(0).one_line() == std::vector<int>{2, 1, 3});
  CHECK(ext.slot(1).one_line() == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(star(swap2, t), ShapeError);
}

TEST_CASE("star is commutative and associative on orbits") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 3);
    const auto a = oracle::random_tuple(1 + rng() % 3, arity, rng);
    const auto b = oracle::random_tuple(1 + rng() % 3, arity, rng);
    const auto c = oracle::random_tuple(1 + rng() % 2, arity, rng);
    CHECK(canonical_form(star(a, b)).key == canonical_form(star(b, a)).key);
    CHECK(canonical_form(star(star(a, b), c)).key == canonical_form(star(a, star(b, c))).key);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(tuple_1l({{1}, {1}})));
  CHECK_FALSE(is_connected(tuple_1l({{1, 2}, {1, 2}})));
  CHECK(is_connected(tuple_1l({{2, 1}, {1, 2}})));
}

TEST_CASE("components") {
  const auto connected = tuple_1l({{2, 1}, {1, 2}});
  const auto only = components(connected);
  REQUIRE(only.size() == 1);
  CHECK(only[0].tuple() == connected);

  const auto idle = components(tuple_1l({{1, 2}, {1, 2}}));
  REQUIRE(idle.size() == 2);
  CHECK(idle[0].degree() == 1);
  CHECK(idle[0] == idle[1]);

  const auto split = components(tuple_1l({{2, 1, 3}, {1, 2, 3}}));
  REQUIRE(split.size() == 2);
  CHECK(split[0].degree() == 1);
  CHECK(split[1].degree() == 2);
  CHECK(split[1].tuple() == tuple_1l({{2, 1}, {1, 2}}));
}

TEST_CASE("components distribute over star") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 3);
    const auto a = oracle::random_tuple(1 + rng() % 4, arity, rng);
    const auto b = oracle::random_tuple(1 + rng() % 4, arity, rng);
    auto combined = components(star(a, b));
    auto expected = components(a);
    const auto more = components(b);
    expected.insert(expected.end(), more.begin(), more.end());
    std::sort(expected.begin(), expected.end());
    CHECK(combined == expected);

    CHECK(is_connected(a) == (components(a).size() == 1));
  }
}

TEST_CASE("orbit enumeration small cases") {
  CHECK(enumerate_orbits(3, 2, false).size() == 4);
  CHECK(enumerate_orbits(3, 2, true).size() == 3);
  CHECK(enumerate_orbits(2, 3, false).size() == 3);

  // Sorted, canonical, and deduplicated.
  const auto orbits = enumerate_orbits(3, 3, false);
  CHECK(orbits.size() == 11);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    CHECK(canonical_form(orbits[i].tuple()).key == orbits[i]);
    CHECK(orbits[i].connected() == is_connected(orbits[i].tuple()));
    if (i > 0) CHECK(orbits[i - 1] < orbits[i]);
  }
}

TEST_CASE("orbit enumeration matches the Burnside count") {
  for (int k = 2; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m)
      CHECK(BigInt(enumerate_orbits(k, m, false).size()) == dim_invariants(k, m));
}

TEST_CASE("orbit enumeration is deterministic across worker counts") {
  EnumerateOptions serial;
  EnumerateOptions threaded;
  threaded.jobs = 4;
  CHECK(enumerate_orbits(3, 4, false, serial) == enumerate_orbits(3, 4, false, threaded));
}

TEST_CASE("enumeration budget guard") {
  EnumerateOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_orbits(3, 3, false, tiny), BudgetError);
  CHECK_THROWS_AS(enumerate_orbits(3, 12, false), BudgetError);
  CHECK_THROWS_AS(enumerate_orbits(1, 2, false), PreconditionError);
}

TEST_CASE("covering graph round trip") {
  const auto loops = to_covering_graph(tuple_1l({{1}, {1}, {1}}));
  CHECK(loops.num_vertices == 1);
  CHECK(loops.edges.size() == 3);
  for (const auto& e : loops.edges) {
    CHECK(e.source == 1);
    CHECK(e.target == 1);
  }

  const auto two = to_covering_graph(tuple_1l({{2, 1}}));
  CHECK(two.num_vertices == 2);
  REQUIRE(two.edges.size() == 2);
  CHECK(two.edges[0] == CoveringEdge{1, 2, 1});
  CHECK(two.edges[1] == CoveringEdge{2, 1, 1});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_tuple(1 + rng() % 5, 1 + rng() % 3, rng);
    CHECK(from_covering_graph(to_covering_graph(t)) == t);
  }

  CoveringGraph bad;
  bad.num_vertices = 2;
  bad.edges = {{1, 1, 1}, {2, 1, 1}};  // vertex 1 has two incoming color-1 edges
  CHECK_THROWS_AS(from_covering_graph(bad), PreconditionError);
}
