#ifndef QPCUT_CUTTING_PLANE_HPP
#define QPCUT_CUTTING_PLANE_HPP

#include <span>
#include <vector>

#include "qpcut/instance.hpp"
#include "qpcut/linearize.hpp"
#include "qpcut/master.hpp"

namespace qpcut {

/// Default convergence tolerance on the bound gap. The textbook stopping
/// rule is exact equality of the bounds, which floating point needs a
/// tolerance for.
inline constexpr double kDefaultEps = 1e-9;

enum class TerminationReason { kConverged, kIterationCap, kInfeasible };

struct IterationRecord {
  int iter = 0;            // 1-based master solve counter r
  double lower_bound = 0;  // restricted master optimum
  double upper_bound = 0;  // incumbent value after evaluating x~
  double gap = 0;          // upper_bound - lower_bound
  int pool_size = 0;       // cuts in the master that produced x~
  BinaryPoint x_tilde;
};

struct SolveReport {
  CutVariant variant = CutVariant::kBml;
  TerminationReason reason = TerminationReason::kInfeasible;
  double value = 0.0;
  BinaryPoint point;
  int iterations = 0;
  std::vector<IterationRecord> trace;
  std::vector<BinaryPoint> added_lambdas;  // cut generators after the seed cut
};

/// The outer loop: solve the restricted master, take the incumbent upper
/// bound at x~, stop when the gap closes, otherwise turn x~ into the next
/// cut via lambda = x~. The pool is seeded with the all-zeros cut. A
/// lambda repeating before convergence contradicts the finite-convergence
/// argument and raises Error instead of being skipped.
///
/// max_iter <= 0 requests the theoretical cap 2^n + 1 under which the
/// iteration-cap outcome is unreachable.
SolveReport run(const QuadraticInstance& inst, CutVariant variant, double eps = kDefaultEps,
                int max_iter = 0);

/// Objective of the instance at x~: the subproblem value, an upper bound.
double upper_bound(const QuadraticInstance& inst, const BinaryPoint& x_tilde);

/// Harness for comparing the two cut families on identical pools: value[r]
/// is the master optimum over the seed cut plus cuts generated from
/// lambdas[0..r-1], for r = 0..lambdas.size(). The lambda sequence is
/// injected instead of being derived from the master solutions.
std::vector<double> master_values_matched(const QuadraticInstance& inst, CutVariant variant,
                                          std::span<const BinaryPoint> lambdas);

}  // namespace qpcut

#endif  // QPCUT_CUTTING_PLANE_HPP
