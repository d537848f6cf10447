#include <vector>

#include "doctest.h"
#include "luinv/counting.hpp"

using namespace luinv;

namespace {

// Independent partition counter: coin-change DP over part sizes.
long long partition_count_dp(int m) {
  std::vector<long long> ways(m + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int total = part; total <= m; ++total) ways[total] += ways[total - part];
  return ways[m];
}

}  // namespace

TEST_CASE("partition enumeration") {
  const auto one = partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].multiplicities() == std::vector<int>{1});

  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  for (int m = 1; m <= 9; ++m)
    CHECK(static_cast<long long>(partitions(m).size()) == partition_count_dp(m));

  // Fixed order: decreasing-parts representation, descending lexicographic.
  const auto four = partitions(4);
  CHECK(four[0].parts() == std::vector<int>{4});
  CHECK(four[1].parts() == std::vector<int>{3, 1});
  CHECK(four[2].parts() == std::vector<int>{2, 2});
  CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(Partition(3, {1, 1, 1}), PreconditionError);
}

TEST_CASE("centralizer orders") {
  // all fixed points -> m!, a single m-cycle -> m
  CHECK(centralizer_order(Partition(5, {5, 0, 0, 0, 0})) == 120);
  CHECK(centralizer_order(Partition(5, {0, 0, 0, 0, 1})) == 5);
  CHECK(centralizer_order(Partition(4, {0, 2, 0, 0})) == 8);
}

TEST_CASE("dimension formula") {
  for (int m = 1; m <= 8; ++m) CHECK(dim_invariants(2, m) == partition_count_dp(m));
  CHECK(dim_invariants(3, 2) == 4);
  CHECK(dim_invariants(3, 4) == 43);
  CHECK(dim_invariants(4, 3) == 49);
  CHECK_THROWS_AS(dim_invariants(1, 2), PreconditionError);
}

TEST_CASE("euler product") {
  const auto geometric = euler_product({BigInt(1)}, 6);
  for (int i = 0; i <= 6; ++i) CHECK(geometric.coeff(i) == 1);

  const std::vector<BigInt> all_ones(8, BigInt(1));
  const auto parts = euler_product(all_ones, 8);
  for (int m = 1; m <= 8; ++m) CHECK(parts.coeff(m) == partition_count_dp(m));

  const auto k3 = euler_product({BigInt(1), BigInt(3), BigInt(7), BigInt(26)}, 4);
  CHECK(k3.coeff(0) == 1);
  CHECK(k3.coeff(1) == 1);
  CHECK(k3.coeff(2) == 4);
  CHECK(k3.coeff(3) == 11);
  CHECK(k3.coeff(4) == 43);
}

TEST_CASE("connected counts by inversion and enumeration") {
  const auto bip = connected_counts(2, 6);
  CHECK(bip.connected == std::vector<BigInt>(6, BigInt(1)));

  const auto tri = connected_counts(3, 4);
  CHECK(tri.connected == std::vector<BigInt>{1, 3, 7, 26});
  CHECK(tri.dims == std::vector<BigInt>{1, 4, 11, 43});

  const auto quad = connected_counts(4, 2);
  CHECK(quad.connected == std::vector<BigInt>{1, 7});

  // The Euler product over the connected counts reproduces the dimensions.
  const auto product = euler_product(tri.connected, tri.max_m);
  for (int m = 1; m <= tri.max_m; ++m) CHECK(product.coeff(m) == tri.dims[m - 1]);

  CHECK(dim_invariants(5, 1) == 1);
  CHECK(connected_counts(5, 2).connected[0] == 1);
}

TEST_CASE("series helpers") {
  auto s = IntSeries::one(3);
  CHECK(s.coeff(0) == 1);
  CHECK(s.mul(s) == s);
  CHECK_THROWS_AS(s.mul(IntSeries::one(4)), PreconditionError);
  CHECK_THROWS_AS(euler_product({BigInt(-1)}, 3), PreconditionError);
}

TEST_CASE("exactness beyond 64 bits") {
  // d_{7,8} contains the summand (8!)^5 > 2^63, so the table only stays
  // consistent with the Euler identity if nothing wraps.
  const int k = 7, max_m = 8;
  ConnectedCountOptions opts;
  opts.cross_check = false;
  const auto table = connected_counts(k, max_m, opts);
  CHECK(table.dims[7] > BigInt("9223372036854775807"));
  const auto product = euler_product(table.connected, max_m);
  for (int m = 1; m <= max_m; ++m) CHECK(product.coeff(m) == table.dims[m - 1]);
}
