#include "qpcut/oracle.hpp"

#include <algorithm>
#include <string>

namespace qpcut {

namespace {

void decode_mask(std::uint64_t mask, int n, BinaryPoint& x) {
  for (int i = 0; i < n; ++i) {
    x[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
  }
}

struct Best {
  bool found = false;
  double value = 0.0;
  std::uint64_t mask = 0;

  // Lexicographic order on points equals numeric order on masks.
  void offer(double value_in, std::uint64_t mask_in) {
    if (!found || value_in < value || (value_in == value && mask_in < mask)) {
      found = true;
      value = value_in;
      mask = mask_in;
    }
  }
};

void check_dimension(int n, int limit, const char* what) {
  if (n > limit) {
    throw Error(std::string("dimension too large for ") + what + " (n=" + std::to_string(n) +
                ", limit=" + std::to_string(limit) + ")");
  }
}

}  // namespace

std::optional<BruteForceResult> brute_force(const QuadraticInstance& inst) {
  check_dimension(inst.n, kMaxBruteForceDim, "brute force");
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  Best best;
#pragma omp parallel
  {
    Best local;
    BinaryPoint x(static_cast<std::size_t>(inst.n), 0);
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
      decode_mask(static_cast<std::uint64_t>(mask), inst.n, x);
      if (!is_feasible(inst, x)) continue;
      local.offer(objective_value(inst, x), static_cast<std::uint64_t>(mask));
    }
#pragma omp critical(qpcut_brute_force_merge)
    if (local.found) best.offer(local.value, local.mask);
  }
  if (!best.found) return std::nullopt;
  BruteForceResult out;
  out.value = best.value;
  out.point.assign(static_cast<std::size_t>(inst.n), 0);
  decode_mask(best.mask, inst.n, out.point);
  return out;
}

std::optional<BruteForceResult> brute_force_serial(const QuadraticInstance& inst) {
  check_dimension(inst.n, kMaxBruteForceDim, "brute force");
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  Best best;
  BinaryPoint x(static_cast<std::size_t>(inst.n), 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    decode_mask(mask, inst.n, x);
    if (!is_feasible(inst, x)) continue;
    best.offer(objective_value(inst, x), mask);
  }
  if (!best.found) return std::nullopt;
  BruteForceResult out;
  out.value = best.value;
  out.point.assign(static_cast<std::size_t>(inst.n), 0);
  decode_mask(best.mask, inst.n, out.point);
  return out;
}

std::optional<double> brute_force_mixed(const MixedModel& model, const QuadraticInstance& inst) {
  check_dimension(inst.n, kMaxMixedBruteForceDim, "mixed brute force");
  const std::uint64_t total = std::uint64_t{1} << inst.n;
  bool found = false;
  double best = 0.0;
  BinaryPoint x(static_cast<std::size_t>(inst.n), 0);
  std::vector<double> cont(static_cast<std::size_t>(inst.n));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    decode_mask(mask, inst.n, x);
    if (!is_feasible(inst, x)) continue;
    std::fill(cont.begin(), cont.end(), -kInfinity);
    for (const LinkRow& row : model.rows) {
      StableSum rhs;
      for (int j = 0; j < inst.n; ++j) {
        if (x[j] != 0) rhs.add(row.x_coeffs[j]);
      }
      rhs.add(row.offset);
      cont[row.var] = std::max(cont[row.var], rhs.value());
    }
    StableSum objective;
    for (int i = 0; i < inst.n; ++i) {
      objective.add(cont[i]);
      if (x[i] != 0) objective.add(model.x_objective[i]);
    }
    const double value = objective.value();
    if (!found || value < best) {
      found = true;
      best = value;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace qpcut
