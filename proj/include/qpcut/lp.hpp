#ifndef QPCUT_LP_HPP
#define QPCUT_LP_HPP

#include <limits>
#include <vector>

#include "qpcut/instance.hpp"

namespace qpcut {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };

struct LpRow {
  std::vector<double> coeffs;
  Relation rel = Relation::kLe;
  double rhs = 0.0;
};

/// Dense continuous program over variables with (possibly infinite) bounds.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }

  /// Appends a variable and returns its index.
  int add_variable(double lo, double hi, double obj) {
    lower.push_back(lo);
    upper.push_back(hi);
    objective.push_back(obj);
    return num_vars() - 1;
  }

  void add_row(std::vector<double> coeffs, Relation rel, double rhs) {
    rows.push_back(LpRow{std::move(coeffs), rel, rhs});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
};

/// Two-phase dense simplex with Bland's anti-cycling rule. Throws Error if
/// the iteration cap (10,000) is hit, which would indicate a cycling bug
/// rather than a property of the input.
LpSolution solve_lp(const LinearProgram& lp);

/// Appends the instance's cardinality/knapsack rows over variables
/// 0..n-1 of `lp` (which must already have at least n variables).
void append_instance_rows(const QuadraticInstance& inst, LinearProgram& lp);

/// True iff [0,1]^n intersected with the instance's constraints is
/// nonempty. Closed form for at most one constraint, phase-1 LP otherwise.
bool relaxation_nonempty(const QuadraticInstance& inst);

}  // namespace qpcut

#endif  // QPCUT_LP_HPP
