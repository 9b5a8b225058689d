#include "qpcut/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpcut {

namespace {

constexpr int kMaxSimplexIterations = 10000;

// Maps an original variable onto the nonnegative standard-form columns.
struct VarMap {
  int col = -1;        // primary column
  int neg_col = -1;    // second column of a free split, else -1
  double shift = 0.0;  // x = shift + sign * s  (split: x = s - s_neg)
  double sign = 1.0;
};

struct StandardRow {
  std::vector<double> coeffs;
  Relation rel;
  double rhs;
};

class SimplexTableau {
 public:
  SimplexTableau(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * (cols + 1), 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& basis(int r) { return basis_[r]; }
  int basis(int r) const { return basis_[r]; }

  void pivot(int pr, int pc) {
    const double p = at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
  std::vector<int> basis_;
};

// Reduced costs and objective value for the current basis under `cost`.
void compute_reduced_costs(const SimplexTableau& t, const std::vector<double>& cost,
                           std::vector<double>& red, double& value) {
  const int cols = t.cols();
  red.assign(cols, 0.0);
  value = 0.0;
  for (int j = 0; j < cols; ++j) red[j] = cost[j];
  for (int r = 0; r < t.rows(); ++r) {
    const double cb = cost[t.basis(r)];
    if (cb == 0.0) continue;
    value += cb * t.rhs(r);
    for (int j = 0; j < cols; ++j) red[j] -= cb * t.at(r, j);
  }
}

enum class IterResult { kOptimal, kUnbounded };

// Bland's rule throughout: entering column is the lowest index with a
// negative reduced cost; leaving row breaks ratio ties by lowest basic
// variable index.
IterResult run_simplex(SimplexTableau& t, const std::vector<double>& cost, int enter_limit,
                       int& iterations) {
  std::vector<double> red;
  double value = 0.0;
  compute_reduced_costs(t, cost, red, value);
  while (true) {
    if (++iterations > kMaxSimplexIterations) {
      throw Error("simplex iteration limit exceeded");
    }
    int enter = -1;
    for (int j = 0; j < enter_limit; ++j) {
      if (red[j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return IterResult::kOptimal;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = t.rhs(r) / a;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && t.basis(r) < t.basis(leave))) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return IterResult::kUnbounded;

    const double red_enter = red[enter];
    t.pivot(leave, enter);
    // Update the objective row against the normalized pivot row.
    for (int j = 0; j < t.cols(); ++j) red[j] -= red_enter * t.at(leave, j);
    red[enter] = 0.0;
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars();
  LpSolution out;

  // Substitute every variable by nonnegative column(s).
  std::vector<VarMap> vmap(n);
  int num_cols = 0;
  std::vector<StandardRow> srows;
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower[j];
    const double hi = lp.upper[j];
    if (lo > hi + kFeasTol) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    if (lo > -kInfinity) {
      vmap[j] = VarMap{num_cols++, -1, lo, 1.0};
      if (hi < kInfinity) {
        StandardRow r;
        r.coeffs.assign(static_cast<std::size_t>(n), 0.0);  // original-variable space
        r.coeffs[j] = 1.0;
        r.rel = Relation::kLe;
        r.rhs = hi;
        srows.push_back(std::move(r));
      }
    } else if (hi < kInfinity) {
      vmap[j] = VarMap{num_cols++, -1, hi, -1.0};
    } else {
      VarMap m;
      m.col = num_cols++;
      m.neg_col = num_cols++;
      vmap[j] = m;
    }
  }
  for (const LpRow& row : lp.rows) {
    srows.push_back(StandardRow{row.coeffs, row.rel, row.rhs});
  }

  // Express each row over the standard columns, fold in the shifts, and
  // orient it so the right-hand side is nonnegative.
  const int num_rows = static_cast<int>(srows.size());
  std::vector<std::vector<double>> rowcoef(num_rows, std::vector<double>(num_cols, 0.0));
  std::vector<double> rowrhs(num_rows, 0.0);
  std::vector<Relation> rowrel(num_rows, Relation::kEq);
  for (int r = 0; r < num_rows; ++r) {
    double rhs = srows[r].rhs;
    for (int j = 0; j < n; ++j) {
      const double a = srows[r].coeffs[j];
      if (a == 0.0) continue;
      const VarMap& m = vmap[j];
      if (m.neg_col >= 0) {
        rowcoef[r][m.col] += a;
        rowcoef[r][m.neg_col] -= a;
      } else {
        rhs -= a * m.shift;
        rowcoef[r][m.col] += a * m.sign;
      }
    }
    Relation rel = srows[r].rel;
    if (rhs < 0.0) {
      for (double& v : rowcoef[r]) v = -v;
      rhs = -rhs;
      if (rel == Relation::kLe) {
        rel = Relation::kGe;
      } else if (rel == Relation::kGe) {
        rel = Relation::kLe;
      }
    }
    rowrhs[r] = rhs;
    rowrel[r] = rel;
  }

  // Slack / surplus / artificial layout.
  int num_slacks = 0;
  int num_artificials = 0;
  for (int r = 0; r < num_rows; ++r) {
    if (rowrel[r] != Relation::kEq) ++num_slacks;
    if (rowrel[r] != Relation::kLe) ++num_artificials;
  }
  const int slack_base = num_cols;
  const int art_base = num_cols + num_slacks;
  const int total_cols = art_base + num_artificials;

  SimplexTableau t(num_rows, total_cols);
  {
    int next_slack = slack_base;
    int next_art = art_base;
    for (int r = 0; r < num_rows; ++r) {
      for (int j = 0; j < num_cols; ++j) t.at(r, j) = rowcoef[r][j];
      t.rhs(r) = rowrhs[r];
      if (rowrel[r] == Relation::kLe) {
        t.at(r, next_slack) = 1.0;
        t.basis(r) = next_slack++;
      } else if (rowrel[r] == Relation::kGe) {
        t.at(r, next_slack++) = -1.0;
        t.at(r, next_art) = 1.0;
        t.basis(r) = next_art++;
      } else {
        t.at(r, next_art) = 1.0;
        t.basis(r) = next_art++;
      }
    }
  }

  int iterations = 0;

  if (num_artificials > 0) {
    std::vector<double> phase1_cost(total_cols, 0.0);
    for (int j = art_base; j < total_cols; ++j) phase1_cost[j] = 1.0;
    run_simplex(t, phase1_cost, total_cols, iterations);
    double infeas = 0.0;
    for (int r = 0; r < num_rows; ++r) {
      if (t.basis(r) >= art_base) infeas += t.rhs(r);
    }
    if (infeas > kFeasTol) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    // Pivot any artificial still basic (at zero) onto a structural column.
    for (int r = 0; r < num_rows; ++r) {
      if (t.basis(r) < art_base) continue;
      for (int j = 0; j < art_base; ++j) {
        if (std::abs(t.at(r, j)) > kPivotTol) {
          t.pivot(r, j);
          break;
        }
      }
      // A row whose artificial cannot leave is redundant; the artificial
      // stays basic at value zero and is barred from re-entering below.
    }
  }

  // Phase 2 over the structural columns only.
  std::vector<double> cost(total_cols, 0.0);
  const double obj_sign = lp.sense == Sense::kMinimize ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) {
    const VarMap& m = vmap[j];
    const double cj = obj_sign * lp.objective[j];
    if (m.neg_col >= 0) {
      cost[m.col] += cj;
      cost[m.neg_col] -= cj;
    } else {
      cost[m.col] += cj * m.sign;
    }
  }
  if (run_simplex(t, cost, art_base, iterations) == IterResult::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  std::vector<double> colval(total_cols, 0.0);
  for (int r = 0; r < num_rows; ++r) colval[t.basis(r)] = t.rhs(r);
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const VarMap& m = vmap[j];
    if (m.neg_col >= 0) {
      out.x[j] = colval[m.col] - colval[m.neg_col];
    } else {
      out.x[j] = m.shift + m.sign * colval[m.col];
    }
  }
  StableSum value;
  for (int j = 0; j < n; ++j) value.add(lp.objective[j] * out.x[j]);
  out.value = value.value();
  out.status = LpStatus::kOptimal;
  return out;
}

void append_instance_rows(const QuadraticInstance& inst, LinearProgram& lp) {
  const int n = inst.n;
  for (const Constraint& con : inst.constraints) {
    if (const auto* card = std::get_if<CardinalityConstraint>(&con)) {
      std::vector<double> coeffs(lp.num_vars(), 0.0);
      std::fill_n(coeffs.begin(), n, 1.0);
      lp.add_row(std::move(coeffs), card->op, static_cast<double>(card->k));
    } else {
      const auto& knap = std::get<KnapsackConstraint>(con);
      std::vector<double> coeffs(lp.num_vars(), 0.0);
      std::copy(knap.weights.begin(), knap.weights.end(), coeffs.begin());
      lp.add_row(std::move(coeffs), knap.op, knap.capacity);
    }
  }
}

bool relaxation_nonempty(const QuadraticInstance& inst) {
  if (inst.constraints.empty()) return true;
  if (inst.constraints.size() == 1) {
    const Constraint& con = inst.constraints.front();
    if (const auto* card = std::get_if<CardinalityConstraint>(&con)) {
      switch (card->op) {
        case Relation::kLe:
          return card->k >= 0;
        case Relation::kGe:
          return card->k <= inst.n;
        case Relation::kEq:
          return card->k >= 0 && card->k <= inst.n;
      }
    }
    const auto& knap = std::get<KnapsackConstraint>(con);
    if (knap.op == Relation::kLe) return knap.capacity >= -kFeasTol;
    const double total = std::accumulate(knap.weights.begin(), knap.weights.end(), 0.0);
    return total >= knap.capacity - kFeasTol;
  }
  LinearProgram lp;
  for (int j = 0; j < inst.n; ++j) lp.add_variable(0.0, 1.0, 0.0);
  append_instance_rows(inst, lp);
  return solve_lp(lp).status != LpStatus::kInfeasible;
}

}  // namespace qpcut
