#include "qpcut/cutting_plane.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "qpcut/bounds.hpp"
#include "qpcut/lp.hpp"

namespace qpcut {

namespace {

int theoretical_iteration_cap(int n) {
  if (n >= 30) return std::numeric_limits<int>::max();
  return (1 << n) + 1;
}

}  // namespace

SolveReport run(const QuadraticInstance& inst, CutVariant variant, double eps, int max_iter) {
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  if (max_iter <= 0) max_iter = theoretical_iteration_cap(inst.n);

  SolveReport report;
  report.variant = variant;

  if (!relaxation_nonempty(inst)) {
    // No continuous point, hence no binary point either.
    report.reason = TerminationReason::kInfeasible;
    return report;
  }
  const BoundVectors bounds = compute_bound_vectors(inst);

  std::vector<Cut> pool;
  std::set<BinaryPoint> seen;
  const BinaryPoint zeros(static_cast<std::size_t>(inst.n), 0);
  pool.push_back(make_cut(variant, zeros, inst, bounds));
  seen.insert(zeros);

  bool have_incumbent = false;
  double incumbent_value = 0.0;
  BinaryPoint incumbent_point;

  for (int r = 1; r <= max_iter; ++r) {
    const MasterSolution ms = solve_master(inst, pool);
    if (ms.status == MasterStatus::kInfeasible) {
      report.reason = TerminationReason::kInfeasible;
      report.iterations = r;
      return report;
    }
    const double lb = ms.value;
    const double ub_at_x = upper_bound(inst, ms.x);
    if (!have_incumbent || ub_at_x < incumbent_value) {
      have_incumbent = true;
      incumbent_value = ub_at_x;
      incumbent_point = ms.x;
    }
    report.trace.push_back(IterationRecord{r, lb, incumbent_value, incumbent_value - lb,
                                           static_cast<int>(pool.size()), ms.x});
    report.iterations = r;
    if (incumbent_value - lb <= eps) {
      report.reason = TerminationReason::kConverged;
      report.value = incumbent_value;
      report.point = incumbent_point;
      return report;
    }
    const BinaryPoint lambda = subproblem_lambda(ms.x);
    if (!seen.insert(lambda).second) {
      // A repeated generator with an open gap contradicts the
      // finite-convergence argument; fail loudly.
      throw Error("internal error: duplicate lambda before convergence");
    }
    report.added_lambdas.push_back(lambda);
    pool.push_back(make_cut(variant, lambda, inst, bounds));
  }

  report.reason = TerminationReason::kIterationCap;
  report.value = incumbent_value;
  report.point = incumbent_point;
  return report;
}

double upper_bound(const QuadraticInstance& inst, const BinaryPoint& x_tilde) {
  return objective_value(inst, x_tilde);
}

std::vector<double> master_values_matched(const QuadraticInstance& inst, CutVariant variant,
                                          std::span<const BinaryPoint> lambdas) {
  const BoundVectors bounds = compute_bound_vectors(inst);
  std::vector<Cut> pool;
  pool.push_back(make_cut(variant, BinaryPoint(static_cast<std::size_t>(inst.n), 0), inst, bounds));
  std::vector<double> values;
  values.reserve(lambdas.size() + 1);
  for (std::size_t r = 0;; ++r) {
    const MasterSolution ms = solve_master(inst, pool);
    if (ms.status != MasterStatus::kOptimal) throw Error("matched-pool master infeasible");
    values.push_back(ms.value);
    if (r == lambdas.size()) break;
    pool.push_back(make_cut(variant, lambdas[r], inst, bounds));
  }
  return values;
}

}  // namespace qpcut
