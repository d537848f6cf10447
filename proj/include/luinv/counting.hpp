#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "luinv/errors.hpp"
#include "luinv/perm.hpp"

namespace luinv {

using BigInt = boost::multiprecision::cpp_int;

// A partition of m in multiplicity form: multiplicities()[i-1] parts of
// size i, with sum i * a_i == m.
class Partition {
public:
  Partition(int m, std::vector<int> multiplicities);

  int m() const { return m_; }
  // Multiplicity of parts of the given size (1-based).
  int multiplicity(int part) const { return multiplicities_[part - 1]; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }
  // Parts in decreasing order, e.g. (3,1,1).
  std::vector<int> parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  int m_;
  std::vector<int> multiplicities_;
};

// All partitions of m, ordered by decreasing-parts representation in
// descending lexicographic order: (m) first, (1^m) last.
std::vector<Partition> partitions(int m);

// prod_i i^{a_i} * a_i!, the order of the centralizer of a permutation
// with cycle type a.
BigInt centralizer_order(const Partition& a);

// d_{k,m} = sum over partitions a of m of centralizer_order(a)^(k-2);
// the dimension of the degree-m invariant subspace in the stable range.
BigInt dim_invariants(int k, int m);

// Integer power series truncated at a fixed order, constant term first.
class IntSeries {
public:
  explicit IntSeries(int order);
  IntSeries(int order, std::vector<BigInt> coeffs);

  static IntSeries one(int order);

  int order() const { return order_; }
  const BigInt& coeff(int i) const { return coeffs_[i]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  void set_coeff(int i, BigInt v) { coeffs_[i] = std::move(v); }

  // Truncated product.
  IntSeries mul(const IntSeries& other) const;

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
  int order_;
  std::vector<BigInt> coeffs_;
};

// prod_{d>=1} (1 - t^d)^(-u[d-1]) expanded to the given order with exact
// integer coefficients.
IntSeries euler_product(const std::vector<BigInt>& u, int order);

struct CountTable {
  int k = 0;
  int max_m = 0;
  std::vector<BigInt> dims;       // dims[m-1] = d_{k,m}
  std::vector<BigInt> connected;  // connected[d-1] = u_d(F_{k-1})
};

struct ConnectedCountOptions {
  // Enumeration cross-checks run for every degree whose nominal cost fits.
  std::uint64_t enum_budget = 1'000'000'000;
  bool cross_check = true;
  int jobs = 1;
};

// Dimensions d_{k,m} for m <= max_m together with the connected-cover
// counts u_d obtained by order-by-order inversion of the Euler product.
// Throws InconsistencyError if direct orbit enumeration disagrees.
CountTable connected_counts(int k, int max_m, const ConnectedCountOptions& opts = {});

}  // namespace luinv
