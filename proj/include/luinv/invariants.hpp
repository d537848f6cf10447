#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "luinv/errors.hpp"
#include "luinv/perm.hpp"
#include "luinv/states.hpp"

namespace luinv {

enum class InvariantKind { pure, mixed };

// One invariant polynomial: an orbit of permutation tuples plus the side
// (pure needs arity k-1 on k parties, mixed arity k on k parties).
struct InvariantSpec {
  InvariantKind kind = InvariantKind::pure;
  OrbitKey orbit;

  int degree() const { return orbit.degree(); }
  int arity() const { return orbit.arity(); }
};

struct EvalOptions {
  std::uint64_t term_budget = 1'000'000'000;  // refuse larger index sums
  int jobs = 1;
};

// Core contraction: sum over all assignments of m row multi-indices of
// prod_l rho[I_l, J_l] where component j of J_l comes from row sigma_j(l).
// Deterministic pairwise accumulation; value does not depend on jobs.
Complex eval_tuple_on_density(const PermTuple& t, const MixedState& rho,
                              const EvalOptions& opts = {});

// Pure-state invariant. Evaluates through the reduced density matrix of
// the last party, which shrinks the index sum from (prod_j<=k n_j)^m to
// (prod_j<k n_j)^m terms.
Complex eval_pure(const InvariantSpec& spec, const PureState& psi, const EvalOptions& opts = {});

Complex eval_mixed(const InvariantSpec& spec, const MixedState& rho, const EvalOptions& opts = {});

// The free generating set up to degree max_m: one pure invariant per
// connected orbit, sorted by (degree, canonical order).
std::vector<InvariantSpec> generators(int k, int max_m, const EnumerateOptions& opts = {});

// Connected components of the orbit; the invariant of the input equals
// the product of the invariants of the returned orbits on every state.
std::vector<OrbitKey> factorize_invariant(const OrbitKey& orbit);

}  // namespace luinv
