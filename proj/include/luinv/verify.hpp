#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luinv/counting.hpp"
#include "luinv/invariants.hpp"
#include "luinv/perm.hpp"
#include "luinv/states.hpp"

namespace luinv {

struct CheckCase {
  std::string label;
  double residual = 0.0;
  bool ok = true;
};

// Outcome of one property suite. For numerical checks passed equals
// max_residual <= tolerance; exact checks use residual 0/1 per case.
struct CheckReport {
  std::string name;
  bool passed = true;
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::string note;
  std::vector<CheckCase> details;

  void add_case(std::string label, double residual);
};

// |a - b| / (1 + |b|).
double relative_residual(Complex a, Complex b);

// Every degree-m invariant before and after a random local unitary.
CheckReport check_invariance(int k, int m, const SystemShape& shape, int trials,
                             std::uint64_t seed, double tol = 1e-10,
                             const EvalOptions& eval = {});

// f_{s*t}(psi) against f_s(psi) f_t(psi) for random orbits and states.
CheckReport check_multiplicativity(int k, int m1, int m2, const SystemShape& shape, int trials,
                                   std::uint64_t seed, double tol = 1e-10,
                                   const EvalOptions& eval = {});

// Numerical rank of the (2 d_{k,m}) x num_states real matrix of invariant
// values; must equal d_{k,m}. Shapes below the stable range n >= (m,..,m)
// are refused unless diagnostic is set, in which case the observed rank is
// recorded without any assertion.
CheckReport check_basis_rank(int k, int m, const SystemShape& shape, int num_states,
                             std::uint64_t seed, bool diagnostic = false,
                             const EvalOptions& eval = {});

// Full rank of the finite-difference Jacobian of all generators of degree
// <= max_m at one random state certifies their algebraic independence.
CheckReport check_algebraic_independence(int k, int max_m, const SystemShape& shape,
                                         std::uint64_t seed, const EvalOptions& eval = {});

// eval_pure on psi against eval_mixed on reduce_last(psi).
CheckReport check_pure_mixed(int k, int m, const SystemShape& shape, int trials,
                             std::uint64_t seed, double tol = 1e-12,
                             const EvalOptions& eval = {});

// Every degree-m invariant on psi against the zero-padded embedding.
CheckReport check_padding(int k, int m, const SystemShape& shape, const SystemShape& bigger,
                          int trials, std::uint64_t seed, double tol = 1e-12,
                          const EvalOptions& eval = {});

// Three ways to the dimension sequence: direct orbit enumeration (within
// budget), the partition-sum formula, and the Euler product over the
// inverted connected counts.
CheckReport check_series_consistency(int k, int max_m,
                                     std::uint64_t enum_budget = 1'000'000'000, int jobs = 1);

// conj(f_[s])(psi) against f_[s^-1](psi).
CheckReport check_conjugation_symmetry(int k, int m, const SystemShape& shape, int trials,
                                       std::uint64_t seed, double tol = 1e-12,
                                       const EvalOptions& eval = {});

}  // namespace luinv
