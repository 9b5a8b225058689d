#include "qpcut/linearize.hpp"

#include <stdexcept>

namespace qpcut {

namespace {

// Shared row layout for all three variants: for index i,
//   cont_i >= sum_{j != i} b_ij x_j + self_coeff_i x_i + offset_i
// followed by the second family cont_i >= floor_coeff_i x_i.
MixedModel build_model(const QuadraticInstance& inst, ModelVariant variant,
                       std::span<const double> self_coeff, std::span<const double> row_offset,
                       std::span<const double> floor_coeff, std::span<const double> x_objective) {
  MixedModel model;
  model.variant = variant;
  model.n = inst.n;
  model.x_objective.assign(x_objective.begin(), x_objective.end());
  model.rows.reserve(static_cast<std::size_t>(inst.n) * 2);
  for (int i = 0; i < inst.n; ++i) {
    LinkRow row;
    row.var = i;
    row.x_coeffs.assign(static_cast<std::size_t>(inst.n), 0.0);
    for (int j = 0; j < inst.n; ++j) {
      if (j != i) row.x_coeffs[j] = inst.b_at(i, j);
    }
    row.x_coeffs[i] = self_coeff[i];
    row.offset = row_offset[i];
    model.rows.push_back(std::move(row));

    LinkRow floor_row;
    floor_row.var = i;
    floor_row.x_coeffs.assign(static_cast<std::size_t>(inst.n), 0.0);
    floor_row.x_coeffs[i] = floor_coeff[i];
    model.rows.push_back(std::move(floor_row));
  }
  return model;
}

}  // namespace

MixedModel build_pl1(const QuadraticInstance& inst, const BoundVectors& bounds) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<double> offsets(n);
  for (std::size_t i = 0; i < n; ++i) offsets[i] = -bounds.u[i];
  return build_model(inst, ModelVariant::kPl1, bounds.u, offsets, std::vector<double>(n, 0.0),
                     inst.c);
}

MixedModel build_pl2(const QuadraticInstance& inst, const BoundVectors& bounds) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<double> offsets(n);
  for (std::size_t i = 0; i < n; ++i) offsets[i] = -bounds.v[i];
  return build_model(inst, ModelVariant::kPl2, bounds.v, offsets, bounds.l, inst.c);
}

MixedModel build_pl2_prime(const QuadraticInstance& inst, const BoundVectors& bounds) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<double> self(n);
  std::vector<double> offsets(n);
  std::vector<double> x_obj(n);
  for (std::size_t i = 0; i < n; ++i) {
    self[i] = bounds.v[i] - bounds.l[i];
    offsets[i] = -bounds.v[i];
    x_obj[i] = bounds.l[i] + inst.c[i];
  }
  return build_model(inst, ModelVariant::kPl2Prime, self, offsets, std::vector<double>(n, 0.0),
                     x_obj);
}

LinearProgram relaxation_lp(const MixedModel& model, const QuadraticInstance& inst) {
  LinearProgram lp;
  const int n = model.n;
  for (int j = 0; j < n; ++j) lp.add_variable(0.0, 1.0, model.x_objective[j]);
  for (int i = 0; i < n; ++i) lp.add_variable(-kInfinity, kInfinity, 1.0);
  for (const LinkRow& row : model.rows) {
    std::vector<double> coeffs(static_cast<std::size_t>(2 * n), 0.0);
    for (int j = 0; j < n; ++j) coeffs[j] = -row.x_coeffs[j];
    coeffs[static_cast<std::size_t>(n) + row.var] = 1.0;
    lp.add_row(std::move(coeffs), Relation::kGe, row.offset);
  }
  append_instance_rows(inst, lp);
  return lp;
}

double relaxation_bound(const QuadraticInstance& inst, const BoundVectors& bounds,
                        ModelVariant variant) {
  MixedModel model;
  switch (variant) {
    case ModelVariant::kPl1:
      model = build_pl1(inst, bounds);
      break;
    case ModelVariant::kPl2:
      model = build_pl2(inst, bounds);
      break;
    case ModelVariant::kPl2Prime:
      model = build_pl2_prime(inst, bounds);
      break;
  }
  const LpSolution sol = solve_lp(relaxation_lp(model, inst));
  if (sol.status != LpStatus::kOptimal) throw Error("relaxation LP not optimal");
  return sol.value;
}

Cut make_cut(CutVariant variant, const BinaryPoint& lambda, const QuadraticInstance& inst,
             const BoundVectors& bounds) {
  if (static_cast<int>(lambda.size()) != inst.n) {
    throw std::invalid_argument("lambda length does not match instance dimension");
  }
  for (const auto bit : lambda) {
    if (bit > 1) throw std::invalid_argument("lambda must be a 0/1 vector");
  }
  Cut cut;
  cut.variant = variant;
  cut.lambda = lambda;
  cut.coeffs.assign(static_cast<std::size_t>(inst.n), 0.0);
  StableSum offset;
  for (int i = 0; i < inst.n; ++i) {
    StableSum coeff;
    for (int j = 0; j < inst.n; ++j) {
      if (j != i && lambda[j] != 0) coeff.add(inst.b_at(j, i));
    }
    if (variant == CutVariant::kBml) {
      if (lambda[i] != 0) {
        coeff.add(bounds.u[i]);
        offset.add(bounds.u[i]);
      }
    } else {
      if (lambda[i] != 0) {
        coeff.add(bounds.v[i] - bounds.l[i]);
        offset.add(bounds.v[i]);
      }
      coeff.add(bounds.l[i]);
    }
    cut.coeffs[i] = coeff.value();
  }
  cut.offset = offset.value();
  return cut;
}

double evaluate_cut(const Cut& cut, std::span<const double> x) {
  StableSum sum;
  for (std::size_t i = 0; i < cut.coeffs.size(); ++i) sum.add(cut.coeffs[i] * x[i]);
  return sum.value() - cut.offset;
}

double evaluate_cut(const Cut& cut, const BinaryPoint& x) {
  StableSum sum;
  for (std::size_t i = 0; i < cut.coeffs.size(); ++i) {
    sum.add(x[i] != 0 ? cut.coeffs[i] : 0.0);
  }
  return sum.value() - cut.offset;
}

}  // namespace qpcut
