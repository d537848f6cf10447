// Acceptance suite: each criterion prints one pass/fail line with its
// runtime; the process exits nonzero if any of them fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "luinv/counting.hpp"
#include "luinv/invariants.hpp"
#include "luinv/verify.hpp"

using namespace luinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

long long partition_count_dp(int m) {
  std::vector<long long> ways(m + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int total = part; total <= m; ++total) ways[total] += ways[total - part];
  return ways[m];
}

double rel(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

// 1. Three-way agreement of d_{3,m} for m <= 6.
Outcome criterion_series() {
  Outcome out;
  const std::vector<BigInt> expected{1, 4, 11, 43, 161, 901};
  const auto table = connected_counts(3, 6);
  const auto product = euler_product(table.connected, 6);
  for (int m = 1; m <= 6; ++m) {
    out.require(dim_invariants(3, m) == expected[m - 1], "formula leg at m=" + std::to_string(m));
    out.require(BigInt(enumerate_orbits(3, m, false).size()) == expected[m - 1],
                "enumeration leg at m=" + std::to_string(m));
    out.require(product.coeff(m) == expected[m - 1], "Euler leg at m=" + std::to_string(m));
    out.require(table.dims[m - 1] == expected[m - 1], "table leg at m=" + std::to_string(m));
  }
  return out;
}

// 2. Connected-cover counts across free-group ranks.
Outcome criterion_connected() {
  Outcome out;
  const std::vector<BigInt> rank2{1, 3, 7, 26, 97};
  const auto f2 = connected_counts(3, 5);
  for (int d = 1; d <= 5; ++d) {
    out.require(f2.connected[d - 1] == rank2[d - 1], "u_" + std::to_string(d) + "(F_2)");
    out.require(BigInt(enumerate_orbits(3, d, true).size()) == rank2[d - 1],
                "enumerated u_" + std::to_string(d) + "(F_2)");
  }
  const auto f1 = connected_counts(2, 8);
  for (int d = 1; d <= 8; ++d) {
    out.require(f1.connected[d - 1] == 1, "u_" + std::to_string(d) + "(F_1)");
    out.require(enumerate_orbits(2, d, true).size() == 1,
                "enumerated u_" + std::to_string(d) + "(F_1)");
  }
  const std::vector<BigInt> rank3{1, 7, 41};
  const auto f3 = connected_counts(4, 3);
  for (int d = 1; d <= 3; ++d) {
    out.require(f3.connected[d - 1] == rank3[d - 1], "u_" + std::to_string(d) + "(F_3)");
    out.require(BigInt(enumerate_orbits(4, d, true).size()) == rank3[d - 1],
                "enumerated u_" + std::to_string(d) + "(F_3)");
  }
  return out;
}

// 3. Bipartite closed forms: partition numbers and power-sum traces.
Outcome criterion_bipartite() {
  Outcome out;
  const std::vector<long long> frozen{1, 2, 3, 5, 7, 11, 15, 22};
  for (int m = 1; m <= 8; ++m) {
    out.require(dim_invariants(2, m) == BigInt(frozen[m - 1]),
                "p(" + std::to_string(m) + ") frozen value");
    out.require(dim_invariants(2, m) == BigInt(partition_count_dp(m)),
                "p(" + std::to_string(m) + ") DP oracle");
  }

  const SystemShape shape{{4, 4}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_pure(shape, 9000 + trial, true);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          rho(a, b) += psi.coeffs[a * 4 + c] * std::conj(psi.coeffs[b * 4 + c]);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(4, 4);
    for (int m = 1; m <= 8; ++m) {
      power = power * rho;
      std::vector<int> images(m);
      for (int i = 0; i < m; ++i) images[i] = (i + 1) % m;
      const InvariantSpec cycle{InvariantKind::pure,
                                OrbitKey(PermTuple({Permutation::from_images(images)}))};
      const double residual = rel(eval_pure(cycle, psi), power.trace());
      if (residual > 1e-10)
        out.require(false, "trace residual " + std::to_string(residual) + " at m=" +
                               std::to_string(m) + " trial=" + std::to_string(trial));
    }
  }
  return out;
}

// 4. Local unitary invariance.
Outcome criterion_invariance() {
  Outcome out;
  const struct {
    int k;
    SystemShape shape;
  } configs[] = {{2, SystemShape{{3, 3}}},
                 {3, SystemShape{{2, 2, 2}}},
                 {3, SystemShape{{3, 3, 3}}}};
  for (const auto& cfg : configs)
    for (int m = 1; m <= 3; ++m) {
      const auto report = check_invariance(cfg.k, m, cfg.shape, 20, 40 + m, 1e-10);
      out.require(report.passed, report.name + " max_residual=" +
                                     std::to_string(report.max_residual));
    }
  return out;
}

// 5. Multiplicativity on 56 random (s, t, psi) cases.
Outcome criterion_multiplicativity() {
  Outcome out;
  const int pairs[][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
  int cases = 0;
  for (const auto& p : pairs) {
    const auto bip = check_multiplicativity(2, p[0], p[1], SystemShape{{3, 3}}, 7, 50 + cases,
                                            1e-10);
    out.require(bip.passed, bip.name);
    const auto tri = check_multiplicativity(3, p[0], p[1], SystemShape{{2, 2, 2}}, 7,
                                            60 + cases, 1e-10);
    out.require(tri.passed, tri.name);
    cases += 14;
  }
  out.require(cases >= 50, "at least 50 cases");
  return out;
}

// 6. Basis rank at three stable-range shapes.
Outcome criterion_basis() {
  Outcome out;
  const struct {
    int m;
    SystemShape shape;
    int states;
    int rank;
  } configs[] = {{2, SystemShape{{2, 2, 2}}, 12, 4},
                 {3, SystemShape{{3, 3, 3}}, 24, 11},
                 {4, SystemShape{{4, 4, 4}}, 60, 43}};
  for (const auto& cfg : configs) {
    out.require(dim_invariants(3, cfg.m) == BigInt(cfg.rank),
                "dimension at m=" + std::to_string(cfg.m));
    const auto report = check_basis_rank(3, cfg.m, cfg.shape, cfg.states, 70 + cfg.m);
    out.require(report.passed && !report.details.empty() &&
                    report.details[0].label ==
                        "rank=" + std::to_string(cfg.rank) + " expected=" +
                            std::to_string(cfg.rank),
                report.name + " " + (report.details.empty() ? "" : report.details[0].label));
  }
  return out;
}

// 7. Algebraic independence of the generating set.
Outcome criterion_independence() {
  Outcome out;
  out.require(generators(3, 3).size() == 11, "generator count at max_m=3");
  out.require(generators(3, 4).size() == 37, "generator count at max_m=4");

  const auto low = check_algebraic_independence(3, 3, SystemShape{{3, 3, 3}}, 81);
  out.require(low.passed && low.details[0].label == "rank=11 expected=11",
              low.name + " " + low.details[0].label);
  const auto high = check_algebraic_independence(3, 4, SystemShape{{4, 4, 4}}, 82);
  out.require(high.passed && high.details[0].label == "rank=37 expected=37",
              high.name + " " + high.details[0].label);
  return out;
}

// 8. Pure-mixed bridge and padding invariance.
Outcome criterion_bridge_padding() {
  Outcome out;
  for (int m = 1; m <= 3; ++m) {
    const auto bridge = check_pure_mixed(3, m, SystemShape{{2, 2, 2}}, 20, 90 + m, 1e-12);
    out.require(bridge.passed, bridge.name);
    const auto pad3 = check_padding(3, m, SystemShape{{2, 2, 2}}, SystemShape{{3, 3, 3}}, 20,
                                    100 + m, 1e-12);
    out.require(pad3.passed, pad3.name);
    const auto pad2 = check_padding(2, m, SystemShape{{3, 3}}, SystemShape{{5, 4}}, 20, 110 + m,
                                    1e-12);
    out.require(pad2.passed, pad2.name);
  }
  return out;
}

// 9. Unique factorization and value multiplicativity over components.
Outcome criterion_factorization() {
  Outcome out;
  const SystemShape shape{{2, 2, 2}};
  std::vector<PureState> states;
  for (int i = 0; i < 5; ++i) states.push_back(random_pure(shape, 120 + i, true));

  int orbit_count = 0;
  for (int m = 1; m <= 4; ++m) {
    for (const auto& key : enumerate_orbits(3, m, false)) {
      ++orbit_count;
      const auto comps = factorize_invariant(key);
      out.require(!comps.empty(), "nonempty factorization");
      for (const auto& c : comps)
        out.require(c.connected(), "component connected at m=" + std::to_string(m));

      // Exact uniqueness: the sorted component multiset reassembles to the
      // original orbit under the star product.
      PermTuple rebuilt = comps[0].tuple();
      for (std::size_t i = 1; i < comps.size(); ++i) rebuilt = star(rebuilt, comps[i].tuple());
      out.require(canonical_form(rebuilt).key == key,
                  "star reassembly at m=" + std::to_string(m));

      for (const auto& psi : states) {
        const Complex whole = eval_pure({InvariantKind::pure, key}, psi);
        Complex product = 1.0;
        for (const auto& c : comps) product *= eval_pure({InvariantKind::pure, c}, psi);
        const double residual = std::abs(whole - product) / (1.0 + std::abs(product));
        if (residual > 1e-10)
          out.require(false, "value residual " + std::to_string(residual) + " at m=" +
                                 std::to_string(m));
      }
    }
  }
  out.require(orbit_count == 1 + 4 + 11 + 43, "orbit census");
  return out;
}

struct Criterion {
  int number;
  std::string description;
  double time_limit_s;  // 0: none stated
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-way agreement of d_{3,m} = (1,4,11,43,161,901) for m <= 6", 30.0,
       criterion_series},
      {2, "connected counts u(F_2)=(1,3,7,26,97), u(F_1)=1 (d<=8), u(F_3)=(1,7,41)", 60.0,
       criterion_connected},
      {3, "bipartite sanity: p(m) for m <= 8 and m-cycle invariants = Tr(rho^m)", 0.0,
       criterion_bipartite},
      {4, "local unitary invariance, k in {2,3}, m <= 3, residual <= 1e-10", 60.0,
       criterion_invariance},
      {5, "multiplicativity on 56 random (s,t,psi) cases, residual <= 1e-10", 0.0,
       criterion_multiplicativity},
      {6, "basis rank 4 / 11 / 43 at stable-range shapes", 300.0, criterion_basis},
      {7, "algebraic independence: Jacobian ranks 11 and 37", 600.0, criterion_independence},
      {8, "pure-mixed bridge and padding, residual <= 1e-12", 0.0, criterion_bridge_padding},
      {9, "unique factorization into connected components, residual <= 1e-10", 0.0,
       criterion_factorization},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
      outcome.passed = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ");
      outcome.detail += "exceeded " + std::to_string(criterion.time_limit_s) + "s limit";
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", outcome.passed ? "PASS" : "FAIL",
                criterion.number, criterion.description.c_str(), elapsed,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
