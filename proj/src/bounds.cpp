#include "qpcut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>

#include "qpcut/lp.hpp"

namespace qpcut {

namespace {

enum class Restriction { kNone, kFixZero, kFixOne };

struct Item {
  double obj;
  double wt;
  int index;
};

// obj/wt ordering without the division; ties by index keep sums and hence
// floating-point results deterministic.
bool ratio_greater(const Item& a, const Item& b) {
  const double lhs = a.obj * b.wt;
  const double rhs = b.obj * a.wt;
  if (lhs != rhs) return lhs > rhs;
  return a.index < b.index;
}

std::optional<double> closed_form_value(const QuadraticInstance& inst, int i,
                                        Restriction restriction, bool maximize) {
  std::vector<Item> items;
  items.reserve(static_cast<std::size_t>(inst.n));
  const KnapsackConstraint* knap = nullptr;
  const CardinalityConstraint* card = nullptr;
  if (!inst.constraints.empty()) {
    card = std::get_if<CardinalityConstraint>(&inst.constraints.front());
    knap = std::get_if<KnapsackConstraint>(&inst.constraints.front());
  }
  for (int j = 0; j < inst.n; ++j) {
    if (j == i) continue;
    items.push_back(Item{inst.b_at(i, j), knap ? knap->weights[j] : 1.0, j});
  }
  if (restriction == Restriction::kNone) {
    // The fixed coordinate is free; it never contributes to the objective
    // but does count toward the constraint.
    items.push_back(Item{0.0, knap ? knap->weights[i] : 1.0, i});
  }
  const int fixed_count = restriction == Restriction::kFixOne ? 1 : 0;
  const double fixed_weight = restriction == Restriction::kFixOne && knap ? knap->weights[i] : 0.0;
  const int m = static_cast<int>(items.size());

  if (inst.constraints.empty()) {
    if (!maximize) return 0.0;
    double sum = 0.0;
    for (const Item& it : items) sum += it.obj;
    return sum;
  }

  if (card != nullptr) {
    auto sum_extreme = [&](int t, bool largest) {
      std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.obj != b.obj) return largest ? a.obj > b.obj : a.obj < b.obj;
        return a.index < b.index;
      });
      double sum = 0.0;
      for (int r = 0; r < t; ++r) sum += items[r].obj;
      return sum;
    };
    if (maximize) {
      switch (card->op) {
        case Relation::kLe: {
          const int budget = card->k - fixed_count;
          if (budget < 0) return std::nullopt;
          return sum_extreme(std::min(budget, m), true);
        }
        case Relation::kGe: {
          if (fixed_count + m < card->k) return std::nullopt;
          double sum = 0.0;
          for (const Item& it : items) sum += it.obj;
          return sum;
        }
        case Relation::kEq: {
          const int t = card->k - fixed_count;
          if (t < 0 || t > m) return std::nullopt;
          return sum_extreme(t, true);
        }
      }
    }
    switch (card->op) {
      case Relation::kLe:
        return fixed_count <= card->k ? std::optional<double>(0.0) : std::nullopt;
      case Relation::kGe: {
        const int t = std::max(0, card->k - fixed_count);
        if (t > m) return std::nullopt;
        return sum_extreme(t, false);
      }
      case Relation::kEq: {
        const int t = card->k - fixed_count;
        if (t < 0 || t > m) return std::nullopt;
        return sum_extreme(t, false);
      }
    }
  }

  // Single knapsack constraint: fractional greedy.
  if (maximize) {
    if (knap->op == Relation::kGe) {
      double total = fixed_weight;
      double sum = 0.0;
      for (const Item& it : items) {
        total += it.wt;
        sum += it.obj;
      }
      if (total < knap->capacity - kFeasTol) return std::nullopt;
      return sum;
    }
    double cap = knap->capacity - fixed_weight;
    if (cap < -kFeasTol) return std::nullopt;
    cap = std::max(cap, 0.0);
    std::vector<Item> profitable;
    for (const Item& it : items) {
      if (it.obj > 0.0) profitable.push_back(it);
    }
    std::sort(profitable.begin(), profitable.end(), ratio_greater);
    double sum = 0.0;
    for (const Item& it : profitable) {
      if (it.wt <= 0.0) {
        sum += it.obj;
        continue;
      }
      if (cap <= 0.0) break;
      const double take = std::min(1.0, cap / it.wt);
      sum += take * it.obj;
      cap -= take * it.wt;
    }
    return sum;
  }
  if (knap->op == Relation::kLe) {
    return fixed_weight <= knap->capacity + kFeasTol ? std::optional<double>(0.0) : std::nullopt;
  }
  double required = knap->capacity - fixed_weight;
  if (required <= kFeasTol) return 0.0;
  double available = 0.0;
  for (const Item& it : items) available += it.wt;
  if (available < required - kFeasTol) return std::nullopt;
  // Cheapest cost per unit of coverage first.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    const double lhs = a.obj * b.wt;
    const double rhs = b.obj * a.wt;
    if (lhs != rhs) return lhs < rhs;
    return a.index < b.index;
  });
  double sum = 0.0;
  for (const Item& it : items) {
    if (it.wt <= 0.0) continue;  // covers nothing
    const double take = std::min(1.0, required / it.wt);
    sum += take * it.obj;
    required -= take * it.wt;
    if (required <= 0.0) break;
  }
  return sum;
}

std::optional<double> lp_value(const QuadraticInstance& inst, int i, Restriction restriction,
                               bool maximize) {
  LinearProgram lp;
  lp.sense = maximize ? Sense::kMaximize : Sense::kMinimize;
  for (int j = 0; j < inst.n; ++j) {
    lp.add_variable(0.0, 1.0, j == i ? 0.0 : inst.b_at(i, j));
  }
  if (restriction == Restriction::kFixZero) lp.upper[i] = 0.0;
  if (restriction == Restriction::kFixOne) lp.lower[i] = 1.0;
  append_instance_rows(inst, lp);
  const LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status != LpStatus::kOptimal) throw Error("bound subproblem unbounded");
  return sol.value;
}

std::optional<double> extreme_value(const QuadraticInstance& inst, int i, Restriction restriction,
                                    bool maximize, BoundMethod method) {
  const bool closed = method == BoundMethod::kClosedForm ||
                      (method == BoundMethod::kAuto && inst.constraints.size() <= 1);
  if (closed) {
    if (inst.constraints.size() > 1) {
      throw Error("closed-form bounds require at most one constraint");
    }
    return closed_form_value(inst, i, restriction, maximize);
  }
  return lp_value(inst, i, restriction, maximize);
}

void fill_index(const QuadraticInstance& inst, BoundMethod method, int i, BoundVectors& bv) {
  const auto u = extreme_value(inst, i, Restriction::kNone, true, method);
  if (!u) throw Error("empty relaxation");
  bv.u[i] = *u;
  if (const auto v = extreme_value(inst, i, Restriction::kFixZero, true, method)) {
    bv.v[i] = *v;
  } else {
    bv.v[i] = *u;
    bv.v_fallback[i] = 1;
  }
  if (const auto l = extreme_value(inst, i, Restriction::kFixOne, false, method)) {
    bv.l[i] = *l;
  } else {
    bv.l[i] = 0.0;
    bv.l_fallback[i] = 1;
  }
}

BoundVectors compute_impl(const QuadraticInstance& inst, BoundMethod method, bool parallel) {
  BoundVectors bv;
  const auto n = static_cast<std::size_t>(inst.n);
  bv.u.assign(n, 0.0);
  bv.v.assign(n, 0.0);
  bv.l.assign(n, 0.0);
  bv.v_fallback.assign(n, 0);
  bv.l_fallback.assign(n, 0);

  if (!parallel) {
    for (int i = 0; i < inst.n; ++i) fill_index(inst, method, i, bv);
    return bv;
  }

  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < inst.n; ++i) {
    try {
      fill_index(inst, method, i, bv);
    } catch (...) {
#pragma omp critical(qpcut_bounds_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return bv;
}

}  // namespace

BoundVectors compute_bound_vectors(const QuadraticInstance& inst, BoundMethod method) {
  return compute_impl(inst, method, true);
}

BoundVectors compute_bound_vectors_serial(const QuadraticInstance& inst, BoundMethod method) {
  return compute_impl(inst, method, false);
}

std::vector<double> compute_u(const QuadraticInstance& inst, BoundMethod method) {
  return compute_bound_vectors(inst, method).u;
}

std::vector<double> compute_v(const QuadraticInstance& inst, BoundMethod method) {
  return compute_bound_vectors(inst, method).v;
}

std::vector<double> compute_l(const QuadraticInstance& inst, BoundMethod method) {
  return compute_bound_vectors(inst, method).l;
}

}  // namespace qpcut
