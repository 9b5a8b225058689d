#ifndef QPCUT_LINEARIZE_HPP
#define QPCUT_LINEARIZE_HPP

#include <span>
#include <vector>

#include "qpcut/bounds.hpp"
#include "qpcut/instance.hpp"
#include "qpcut/lp.hpp"

namespace qpcut {

enum class ModelVariant { kPl1, kPl2, kPl2Prime };

/// One lower-bounding row cont[var] >= x_coeffs . x + offset.
struct LinkRow {
  int var = 0;
  std::vector<double> x_coeffs;
  double offset = 0.0;
};

/// Mixed 0-1 linear model equivalent to the quadratic instance: binary x,
/// one continuous variable per index, and 2n linking rows. The continuous
/// part of the objective is always the plain sum; the x part carries c
/// (kPl1, kPl2) or l + c (kPl2Prime).
struct MixedModel {
  ModelVariant variant = ModelVariant::kPl1;
  int n = 0;
  std::vector<LinkRow> rows;
  std::vector<double> x_objective;
};

/// Rows: y_i >= sum_{j != i} b_ij x_j + u_i x_i - u_i  and  y_i >= 0.
MixedModel build_pl1(const QuadraticInstance& inst, const BoundVectors& bounds);

/// Rows: y_i >= sum_{j != i} b_ij x_j + v_i x_i - v_i  and  y_i >= l_i x_i.
MixedModel build_pl2(const QuadraticInstance& inst, const BoundVectors& bounds);

/// PL2 after the substitution t_i = y_i - l_i x_i; same optimal value.
MixedModel build_pl2_prime(const QuadraticInstance& inst, const BoundVectors& bounds);

/// Continuous relaxation of the model (x relaxed to the instance's
/// relaxation polytope), as a program for solve_lp. Exposed for tests.
LinearProgram relaxation_lp(const MixedModel& model, const QuadraticInstance& inst);

/// Optimal value of the continuous relaxation: a valid lower bound on the
/// quadratic optimum.
double relaxation_bound(const QuadraticInstance& inst, const BoundVectors& bounds,
                        ModelVariant variant);

enum class CutVariant { kBml, kImproved };

/// One dual constraint z >= coeffs . x - offset, generated by a binary
/// vector lambda.
///
/// kBml:       coeffs_i = sum_{j != i} lambda_j b_ji + lambda_i u_i,
///             offset   = sum_i lambda_i u_i.
/// kImproved:  coeffs_i = sum_{j != i} lambda_j b_ji + lambda_i (v_i - l_i) + l_i,
///             offset   = sum_i lambda_i v_i.
///
/// Note the transposed matrix access. Improved cuts are stored with the
/// +l_i already folded into the coefficients so both variants share the
/// same master objective z + c . x.
struct Cut {
  CutVariant variant = CutVariant::kBml;
  BinaryPoint lambda;
  std::vector<double> coeffs;
  double offset = 0.0;
};

/// Builds the cut for `lambda`; rejects non-binary entries.
Cut make_cut(CutVariant variant, const BinaryPoint& lambda, const QuadraticInstance& inst,
             const BoundVectors& bounds);

/// coeffs . x - offset.
double evaluate_cut(const Cut& cut, std::span<const double> x);
double evaluate_cut(const Cut& cut, const BinaryPoint& x);

}  // namespace qpcut

#endif  // QPCUT_LINEARIZE_HPP
