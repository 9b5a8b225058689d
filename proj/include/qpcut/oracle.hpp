#ifndef QPCUT_ORACLE_HPP
#define QPCUT_ORACLE_HPP

#include <optional>

#include "qpcut/instance.hpp"
#include "qpcut/linearize.hpp"

namespace qpcut {

inline constexpr int kMaxBruteForceDim = 25;
inline constexpr int kMaxMixedBruteForceDim = 15;

/// Ground truth by exhaustive enumeration. Ties on the objective resolve
/// to the lexicographically smallest point. Shares only the model
/// evaluation routines with the solver paths.
struct BruteForceResult {
  double value = 0.0;
  BinaryPoint point;
};

/// OpenMP-parallel scan of all 2^n assignments; result is independent of
/// the thread count. Empty optional when no feasible point exists.
/// Throws Error when n > kMaxBruteForceDim.
std::optional<BruteForceResult> brute_force(const QuadraticInstance& inst);

/// Serial reference implementation kept for testing and benchmarking.
std::optional<BruteForceResult> brute_force_serial(const QuadraticInstance& inst);

/// Optimal value of the mixed model by enumerating the binary part; each
/// continuous variable is set to the largest of its row lower bounds,
/// its optimal value for fixed x. Empty optional when no feasible point
/// exists. Throws Error when n > kMaxMixedBruteForceDim.
std::optional<double> brute_force_mixed(const MixedModel& model, const QuadraticInstance& inst);

}  // namespace qpcut

#endif  // QPCUT_ORACLE_HPP
