#include "luinv/counting.hpp"

#include <string>
#include <utility>

namespace luinv {

Partition::Partition(int m, std::vector<int> multiplicities)
    : m_(m), multiplicities_(std::move(multiplicities)) {
  if (m_ < 1) throw PreconditionError("partition of a non-positive integer");
  if (static_cast<int>(multiplicities_.size()) != m_)
    throw PreconditionError("partition needs exactly m multiplicities");
  long long sum = 0;
  for (int i = 1; i <= m_; ++i) {
    if (multiplicities_[i - 1] < 0) throw PreconditionError("negative multiplicity");
    sum += static_cast<long long>(i) * multiplicities_[i - 1];
  }
  if (sum != m_) throw PreconditionError("partition multiplicities do not sum to m");
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (int i = m_; i >= 1; --i)
    for (int c = 0; c < multiplicities_[i - 1]; ++c) out.push_back(i);
  return out;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& mult,
                     std::vector<Partition>& out, int m) {
  if (remaining == 0) {
    out.emplace_back(m, mult);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    ++mult[p - 1];
    emit_partitions(remaining - p, p, mult, out, m);
    --mult[p - 1];
  }
}

}  // namespace

std::vector<Partition> partitions(int m) {
  if (m < 1) throw PreconditionError("partitions: m must be positive");
  std::vector<Partition> out;
  std::vector<int> mult(m, 0);
  emit_partitions(m, m, mult, out, m);
  return out;
}

BigInt centralizer_order(const Partition& a) {
  BigInt z = 1;
  for (int i = 1; i <= a.m(); ++i) {
    const int mult = a.multiplicity(i);
    for (int c = 0; c < mult; ++c) z *= i;
    for (int c = 2; c <= mult; ++c) z *= c;
  }
  return z;
}

BigInt dim_invariants(int k, int m) {
  if (k < 2) throw PreconditionError("dim_invariants: k >= 2 required");
  if (m < 1) throw PreconditionError("dim_invariants: m >= 1 required");
  BigInt total = 0;
  for (const Partition& a : partitions(m)) {
    const BigInt z = centralizer_order(a);
    BigInt term = 1;
    for (int e = 0; e < k - 2; ++e) term *= z;
    total += term;
  }
  return total;
}

IntSeries::IntSeries(int order) : order_(order), coeffs_(order + 1, BigInt(0)) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
}

IntSeries::IntSeries(int order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
  if (static_cast<int>(coeffs_.size()) != order + 1)
    throw PreconditionError("series needs order+1 coefficients");
}

IntSeries IntSeries::one(int order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::mul(const IntSeries& other) const {
  if (order_ != other.order_) throw PreconditionError("series order mismatch");
  IntSeries out(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (other.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

namespace {

// (1 - t^d)^(-u) to the given order: coefficient of t^(d*j) is the
// binomial C(u+j-1, j), built by exact incremental division.
IntSeries geometric_power(int d, const BigInt& u, int order) {
  IntSeries s(order);
  BigInt c = 1;
  s.set_coeff(0, c);
  for (int j = 1; d * j <= order; ++j) {
    c *= u + (j - 1);
    c /= j;
    s.set_coeff(d * j, c);
  }
  return s;
}

}  // namespace

IntSeries euler_product(const std::vector<BigInt>& u, int order) {
  IntSeries acc = IntSeries::one(order);
  for (int d = 1; d <= order && d <= static_cast<int>(u.size()); ++d) {
    const BigInt& ud = u[d - 1];
    if (ud < 0) throw PreconditionError("euler_product: exponents must be non-negative");
    if (ud == 0) continue;
    acc = acc.mul(geometric_power(d, ud, order));
  }
  return acc;
}

CountTable connected_counts(int k, int max_m, const ConnectedCountOptions& opts) {
  if (k < 2) throw PreconditionError("connected_counts: k >= 2 required");
  if (max_m < 1) throw PreconditionError("connected_counts: max_m >= 1 required");

  CountTable table;
  table.k = k;
  table.max_m = max_m;
  table.dims.reserve(max_m);
  for (int m = 1; m <= max_m; ++m) table.dims.push_back(dim_invariants(k, m));

  IntSeries target = IntSeries::one(max_m);
  for (int m = 1; m <= max_m; ++m) target.set_coeff(m, table.dims[m - 1]);

  // Logarithm-free recursive division: with P = prod_{e<d} (1-t^e)^(-u_e)
  // expanded in full, the degree-d deficit of the target against P is u_d.
  IntSeries partial = IntSeries::one(max_m);
  for (int d = 1; d <= max_m; ++d) {
    BigInt ud = target.coeff(d) - partial.coeff(d);
    if (ud < 0)
      throw InconsistencyError("connected_counts: negative u_" + std::to_string(d) +
                               " from Euler inversion");
    if (ud > 0) partial = partial.mul(geometric_power(d, ud, max_m));
    table.connected.push_back(std::move(ud));
  }
  if (!(partial == target))
    throw InconsistencyError("connected_counts: Euler product fails to reproduce the dimensions");

  if (opts.cross_check) {
    EnumerateOptions eo;
    eo.budget = opts.enum_budget;
    eo.jobs = opts.jobs;
    for (int d = 1; d <= max_m; ++d) {
      if (enumeration_cost(k, d) > eo.budget) continue;
      const auto connected_orbits = enumerate_orbits(k, d, /*connected_only=*/true, eo);
      if (BigInt(connected_orbits.size()) != table.connected[d - 1])
        throw InconsistencyError("connected_counts: enumeration found " +
                                 std::to_string(connected_orbits.size()) +
                                 " connected orbits at degree " + std::to_string(d) +
                                 " but inversion predicts " +
                                 table.connected[d - 1].str());
      const auto all_orbits = enumerate_orbits(k, d, /*connected_only=*/false, eo);
      if (BigInt(all_orbits.size()) != table.dims[d - 1])
        throw InconsistencyError("connected_counts: enumeration found " +
                                 std::to_string(all_orbits.size()) + " orbits at degree " +
                                 std::to_string(d) + " but the dimension formula gives " +
                                 table.dims[d - 1].str());
    }
  }
  return table;
}

}  // namespace luinv
