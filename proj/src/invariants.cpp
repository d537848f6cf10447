#include "luinv/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <utility>

namespace luinv {

namespace {

struct EvalPlan {
  int m = 0;
  int r = 0;
  std::int64_t n = 0;                        // total density dimension
  std::vector<std::int64_t> strides;         // per party, last fastest
  std::vector<int> dims;
  std::vector<std::vector<int>> src;         // src[l][j] = sigma_j(l)
  std::vector<std::vector<int>> factors_at;  // copies whose factor closes at a depth
};

EvalPlan make_plan(const PermTuple& t, const SystemShape& shape) {
  EvalPlan plan;
  plan.m = t.degree();
  plan.r = t.arity();
  plan.dims = shape.dims;
  plan.n = shape.total_dim();
  plan.strides.assign(plan.r, 1);
  for (int j = plan.r - 2; j >= 0; --j) plan.strides[j] = plan.strides[j + 1] * plan.dims[j + 1];

  plan.src.assign(plan.m, std::vector<int>(plan.r));
  plan.factors_at.assign(plan.m, {});
  for (int l = 0; l < plan.m; ++l) {
    int ready = l;
    for (int j = 0; j < plan.r; ++j) {
      plan.src[l][j] = t.slot(j).apply(l);
      ready = std::max(ready, plan.src[l][j]);
    }
    plan.factors_at[ready].push_back(l);
  }
  return plan;
}

Complex pairwise_sum(std::vector<Complex>& buf, std::size_t len) {
  while (len > 1) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (len % 2 != 0) {
      buf[half] = buf[len - 1];
      len = half + 1;
    } else {
      len = half;
    }
  }
  return len == 1 ? buf[0] : Complex(0.0);
}

// One worker owns its scratch; several workers fill disjoint slices of the
// shared per-root buffer, which is reduced once at the end.
class EvalWorker {
public:
  EvalWorker(const EvalPlan& plan, const Complex* rho) : plan_(plan), rho_(rho) {
    rows_.assign(plan_.m, 0);
    comps_.assign(plan_.m, std::vector<int>(plan_.r, 0));
    child_.assign(plan_.m, std::vector<Complex>(static_cast<std::size_t>(plan_.n)));
  }

  void fill_roots(std::int64_t begin, std::int64_t end, Complex* roots) {
    for (std::int64_t v = begin; v < end; ++v) {
      const Complex p = assign_and_close(0, v, Complex(1.0));
      if (plan_.m == 1) {
        roots[v] = p;
      } else {
        roots[v] = (p == Complex(0.0)) ? Complex(0.0) : subtree(1, p);
      }
    }
  }

private:
  Complex assign_and_close(int depth, std::int64_t v, Complex prod) {
    rows_[depth] = v;
    std::int64_t rest = v;
    for (int j = plan_.r - 1; j >= 0; --j) {
      comps_[depth][j] = static_cast<int>(rest % plan_.dims[j]);
      rest /= plan_.dims[j];
    }
    for (int l : plan_.factors_at[depth]) {
      std::int64_t col = 0;
      for (int j = 0; j < plan_.r; ++j) col += comps_[plan_.src[l][j]][j] * plan_.strides[j];
      prod *= rho_[rows_[l] * plan_.n + col];
      if (prod == Complex(0.0)) break;
    }
    return prod;
  }

  Complex subtree(int depth, Complex prod) {
    auto& buf = child_[depth];
    for (std::int64_t v = 0; v < plan_.n; ++v) {
      const Complex p = assign_and_close(depth, v, prod);
      if (depth == plan_.m - 1) {
        buf[static_cast<std::size_t>(v)] = p;
      } else {
        buf[static_cast<std::size_t>(v)] =
            (p == Complex(0.0)) ? Complex(0.0) : subtree(depth + 1, p);
      }
    }
    return pairwise_sum(buf, static_cast<std::size_t>(plan_.n));
  }

  const EvalPlan& plan_;
  const Complex* rho_;
  std::vector<std::int64_t> rows_;
  std::vector<std::vector<int>> comps_;
  std::vector<std::vector<Complex>> child_;
};

}  // namespace

Complex eval_tuple_on_density(const PermTuple& t, const MixedState& rho,
                              const EvalOptions& opts) {
  rho.shape.validate(1);
  if (rho.shape.parties() != t.arity())
    throw ShapeError("evaluation: tuple arity " + std::to_string(t.arity()) +
                     " does not match " + std::to_string(rho.shape.parties()) + " parties");
  const std::int64_t n = rho.shape.total_dim();
  if (rho.coeffs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ShapeError("evaluation: density matrix has wrong length");

  long double terms = 1.0L;
  for (int l = 0; l < t.degree(); ++l) terms *= static_cast<long double>(n);
  if (terms > static_cast<long double>(opts.term_budget))
    throw BudgetError("evaluation: index sum of about " + std::to_string(terms) +
                      " terms exceeds the budget of " + std::to_string(opts.term_budget));

  const EvalPlan plan = make_plan(t, rho.shape);
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(n)));
  if (jobs == 1) {
    EvalWorker worker(plan, rho.coeffs.data());
    worker.fill_roots(0, n, roots.data());
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      const std::int64_t begin = n * w / jobs;
      const std::int64_t end = n * (w + 1) / jobs;
      futures.push_back(std::async(std::launch::async, [&plan, &rho, &roots, begin, end] {
        EvalWorker worker(plan, rho.coeffs.data());
        worker.fill_roots(begin, end, roots.data());
      }));
    }
    for (auto& f : futures) f.get();
  }
  return pairwise_sum(roots, roots.size());
}

Complex eval_pure(const InvariantSpec& spec, const PureState& psi, const EvalOptions& opts) {
  if (spec.kind != InvariantKind::pure)
    throw PreconditionError("eval_pure: spec kind is not pure");
  psi.shape.validate(2);
  if (psi.shape.parties() != spec.arity() + 1)
    throw ShapeError("eval_pure: orbit arity " + std::to_string(spec.arity()) +
                     " needs " + std::to_string(spec.arity() + 1) + " parties, state has " +
                     std::to_string(psi.shape.parties()));
  const MixedState rho = reduce_last(psi);
  return eval_tuple_on_density(spec.orbit.tuple(), rho, opts);
}

Complex eval_mixed(const InvariantSpec& spec, const MixedState& rho, const EvalOptions& opts) {
  if (spec.kind != InvariantKind::mixed)
    throw PreconditionError("eval_mixed: spec kind is not mixed");
  return eval_tuple_on_density(spec.orbit.tuple(), rho, opts);
}

std::vector<InvariantSpec> generators(int k, int max_m, const EnumerateOptions& opts) {
  if (max_m < 1) throw PreconditionError("generators: max_m >= 1 required");
  std::vector<InvariantSpec> out;
  for (int m = 1; m <= max_m; ++m)
    for (const OrbitKey& key : enumerate_orbits(k, m, /*connected_only=*/true, opts))
      out.push_back(InvariantSpec{InvariantKind::pure, key});
  return out;
}

std::vector<OrbitKey> factorize_invariant(const OrbitKey& orbit) {
  return components(orbit.tuple());
}

}  // namespace luinv
