#ifndef QPCUT_MASTER_HPP
#define QPCUT_MASTER_HPP

#include <span>

#include "qpcut/instance.hpp"
#include "qpcut/linearize.hpp"

namespace qpcut {

enum class MasterStatus { kOptimal, kInfeasible };

/// Exact optimum of the restricted master: x minimizing
/// g(x) = max_t evaluate_cut(cut_t, x) + c . x over the feasible binary
/// set, with z the cut envelope at x. Among minimizers x is the
/// lexicographically smallest. `value` is a valid lower bound on the
/// quadratic optimum.
struct MasterSolution {
  MasterStatus status = MasterStatus::kInfeasible;
  BinaryPoint x;
  double z = 0.0;
  double value = 0.0;
};

/// Depth-first implicit enumeration over the variables in index order.
/// Nodes are pruned with the cut/cost envelope bound (free variables
/// contribute min(coeff, 0)) and with cardinality/knapsack arithmetic on
/// the free suffix. The pool must be nonempty and share one variant.
MasterSolution solve_master(const QuadraticInstance& inst, std::span<const Cut> pool);

/// Optimal solution of the subproblem SP(x~) over the unit hypercube:
/// the identity copy lambda = x~.
BinaryPoint subproblem_lambda(const BinaryPoint& x_tilde);

}  // namespace qpcut

#endif  // QPCUT_MASTER_HPP
