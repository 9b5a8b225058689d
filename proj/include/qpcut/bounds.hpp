#ifndef QPCUT_BOUNDS_HPP
#define QPCUT_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "qpcut/instance.hpp"

namespace qpcut {

/// Per-index extreme values of sum_{j != i} b_ij x_j over the continuous
/// relaxation of the feasible set:
///   u_i -- maximum, unrestricted;
///   v_i -- maximum with x_i fixed to 0;
///   l_i -- minimum with x_i fixed to 1.
///
/// When fixing x_i makes the relaxation empty the corresponding fallback
/// flag is set and the value degrades to the always-valid choice
/// (v_i := u_i, l_i := 0).
struct BoundVectors {
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> l;
  std::vector<std::uint8_t> v_fallback;
  std::vector<std::uint8_t> l_fallback;
};

enum class BoundMethod {
  kAuto,        // closed form for <= 1 constraint, LP otherwise
  kClosedForm,  // greedy closed form; throws on multi-constraint instances
  kLp,          // always solve the per-index LPs
};

/// Computes u, v, l. The 3n per-index subproblems are independent and run
/// under OpenMP; results are identical to the serial reference.
BoundVectors compute_bound_vectors(const QuadraticInstance& inst,
                                   BoundMethod method = BoundMethod::kAuto);

/// Serial reference implementation kept for testing and benchmarking.
BoundVectors compute_bound_vectors_serial(const QuadraticInstance& inst,
                                          BoundMethod method = BoundMethod::kAuto);

std::vector<double> compute_u(const QuadraticInstance& inst, BoundMethod method = BoundMethod::kAuto);
std::vector<double> compute_v(const QuadraticInstance& inst, BoundMethod method = BoundMethod::kAuto);
std::vector<double> compute_l(const QuadraticInstance& inst, BoundMethod method = BoundMethod::kAuto);

}  // namespace qpcut

#endif  // QPCUT_BOUNDS_HPP
