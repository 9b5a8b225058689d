#include "qpcut/master.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpcut {

namespace {

// Pruning margin: a node survives unless its bound beats the incumbent by
// more than this, so rounding in the envelope arithmetic can never cut off
// an optimal leaf.
constexpr double kPruneTol = 1e-9;

struct KnapsackState {
  const KnapsackConstraint* con;
  std::vector<double> load;        // load[d] = fixed weight of x_0..x_{d-1}
  std::vector<double> suffix_sum;  // total weight of indices >= d
};

class MasterSearch {
 public:
  MasterSearch(const QuadraticInstance& inst, std::span<const Cut> pool)
      : inst_(inst), pool_(pool), n_(inst.n) {
    const auto depths = static_cast<std::size_t>(n_) + 1;
    cut_prefix_.assign(pool_.size(), std::vector<StableSum>(depths));
    cut_suffix_min_.assign(pool_.size(), std::vector<double>(depths, 0.0));
    for (std::size_t t = 0; t < pool_.size(); ++t) {
      for (int d = n_ - 1; d >= 0; --d) {
        cut_suffix_min_[t][d] = cut_suffix_min_[t][d + 1] + std::min(pool_[t].coeffs[d], 0.0);
      }
    }
    cost_prefix_.assign(depths, StableSum{});
    cost_suffix_min_.assign(depths, 0.0);
    for (int d = n_ - 1; d >= 0; --d) {
      cost_suffix_min_[d] = cost_suffix_min_[d + 1] + std::min(inst_.c[d], 0.0);
    }
    ones_.assign(depths, 0);
    for (const Constraint& con : inst_.constraints) {
      if (const auto* card = std::get_if<CardinalityConstraint>(&con)) {
        cards_.push_back(card);
      } else {
        const auto& knap = std::get<KnapsackConstraint>(con);
        KnapsackState st;
        st.con = &knap;
        st.load.assign(depths, 0.0);
        st.suffix_sum.assign(depths, 0.0);
        for (int d = n_ - 1; d >= 0; --d) {
          st.suffix_sum[d] = st.suffix_sum[d + 1] + knap.weights[d];
        }
        knaps_.push_back(std::move(st));
      }
    }
    x_.assign(static_cast<std::size_t>(n_), 0);
  }

  MasterSolution run() {
    dfs(0);
    MasterSolution out;
    if (!found_) {
      out.status = MasterStatus::kInfeasible;
      return out;
    }
    out.status = MasterStatus::kOptimal;
    out.x = best_x_;
    out.z = best_z_;
    out.value = best_value_;
    return out;
  }

 private:
  bool constraints_alive(int depth) const {
    const int free = n_ - depth;
    for (const auto* card : cards_) {
      const int ones = ones_[depth];
      if (card->op != Relation::kGe && ones > card->k) return false;
      if (card->op != Relation::kLe && ones + free < card->k) return false;
    }
    for (const KnapsackState& st : knaps_) {
      if (st.con->op == Relation::kLe) {
        if (st.load[depth] > st.con->capacity + kFeasTol) return false;
      } else {
        if (st.load[depth] + st.suffix_sum[depth] < st.con->capacity - kFeasTol) return false;
      }
    }
    return true;
  }

  double node_bound(int depth) const {
    double envelope = cut_prefix_[0][depth].value() + cut_suffix_min_[0][depth] - pool_[0].offset;
    for (std::size_t t = 1; t < pool_.size(); ++t) {
      envelope = std::max(envelope, cut_prefix_[t][depth].value() + cut_suffix_min_[t][depth] -
                                        pool_[t].offset);
    }
    return envelope + cost_prefix_[depth].value() + cost_suffix_min_[depth];
  }

  void dfs(int depth) {
    if (!constraints_alive(depth)) return;
    if (found_ && node_bound(depth) > best_value_ + kPruneTol) return;
    if (depth == n_) {
      // Leaf arithmetic reproduces evaluate_cut / objective accumulation
      // order exactly, so ties against an external enumeration are exact.
      double z = cut_prefix_[0][n_].value() - pool_[0].offset;
      for (std::size_t t = 1; t < pool_.size(); ++t) {
        z = std::max(z, cut_prefix_[t][n_].value() - pool_[t].offset);
      }
      const double value = z + cost_prefix_[n_].value();
      if (!found_ || value < best_value_) {
        found_ = true;
        best_value_ = value;
        best_z_ = z;
        best_x_ = x_;
      }
      return;
    }
    for (std::uint8_t bit = 0; bit <= 1; ++bit) {
      x_[depth] = bit;
      for (std::size_t t = 0; t < pool_.size(); ++t) {
        cut_prefix_[t][depth + 1] = cut_prefix_[t][depth];
        cut_prefix_[t][depth + 1].add(bit != 0 ? pool_[t].coeffs[depth] : 0.0);
      }
      cost_prefix_[depth + 1] = cost_prefix_[depth];
      cost_prefix_[depth + 1].add(bit != 0 ? inst_.c[depth] : 0.0);
      ones_[depth + 1] = ones_[depth] + (bit != 0 ? 1 : 0);
      for (KnapsackState& st : knaps_) {
        st.load[depth + 1] = st.load[depth] + (bit != 0 ? st.con->weights[depth] : 0.0);
      }
      dfs(depth + 1);
    }
    x_[depth] = 0;
  }

  const QuadraticInstance& inst_;
  std::span<const Cut> pool_;
  int n_;

  std::vector<std::vector<StableSum>> cut_prefix_;
  std::vector<std::vector<double>> cut_suffix_min_;
  std::vector<StableSum> cost_prefix_;
  std::vector<double> cost_suffix_min_;
  std::vector<int> ones_;
  std::vector<const CardinalityConstraint*> cards_;
  std::vector<KnapsackState> knaps_;

  BinaryPoint x_;
  bool found_ = false;
  double best_value_ = 0.0;
  double best_z_ = 0.0;
  BinaryPoint best_x_;
};

}  // namespace

MasterSolution solve_master(const QuadraticInstance& inst, std::span<const Cut> pool) {
  if (pool.empty()) throw std::invalid_argument("master cut pool must be nonempty");
  for (const Cut& cut : pool) {
    if (cut.variant != pool.front().variant) {
      throw std::invalid_argument("master cut pool mixes variants");
    }
    if (static_cast<int>(cut.coeffs.size()) != inst.n) {
      throw std::invalid_argument("cut dimension does not match instance");
    }
  }
  MasterSearch search(inst, pool);
  return search.run();
}

BinaryPoint subproblem_lambda(const BinaryPoint& x_tilde) {
  for (const auto bit : x_tilde) {
    if (bit > 1) throw std::invalid_argument("x~ must be a 0/1 vector");
  }
  return x_tilde;
}

}  // namespace qpcut
