#ifndef QPCUT_TESTS_FIXTURES_HPP
#define QPCUT_TESTS_FIXTURES_HPP

#include <string>

#include "qpcut/generator.hpp"
#include "qpcut/instance.hpp"
#include "qpcut/linearize.hpp"

namespace qpcut::testing {

// n=3, all off-diagonal interactions 1, c = (-2,-2,-2), box. Optimum -2.
inline QuadraticInstance make_e1() {
  QuadraticInstance inst;
  inst.n = 3;
  inst.b.assign(9, 1.0);
  for (int i = 0; i < 3; ++i) inst.b_at(i, i) = 0.0;
  inst.c = {-2.0, -2.0, -2.0};
  return inst;
}

// Same matrix, zero costs, cardinality == 2. Optimum 2.
inline QuadraticInstance make_e2() {
  QuadraticInstance inst = make_e1();
  inst.c = {0.0, 0.0, 0.0};
  inst.constraints.emplace_back(CardinalityConstraint{Relation::kEq, 2});
  return inst;
}

// The instance distribution used across the randomized suites: n in 4..12,
// density 0.3/0.7, constraint class cycling box / card:eq:ceil(n/2) /
// knap:le:0.5, B uniform on [0,10), c uniform on [-10,10).
inline GeneratorConfig corpus_config(int index) {
  GeneratorConfig config;
  config.n = 4 + index % 9;
  config.density = (index / 9) % 2 == 0 ? 0.3 : 0.7;
  switch ((index / 18) % 3) {
    case 0:
      config.constraint = "box";
      break;
    case 1:
      config.constraint = "card:eq:" + std::to_string((config.n + 1) / 2);
      break;
    default:
      config.constraint = "knap:le:0.5";
      break;
  }
  config.seed = 1000u + static_cast<std::uint64_t>(index);
  return config;
}

inline QuadraticInstance corpus_instance(int index) {
  return generate_instance(corpus_config(index));
}

// c . x with the library's accumulation order, so master/enumeration
// comparisons are exact.
inline double cost_term(const QuadraticInstance& inst, const BinaryPoint& x) {
  StableSum sum;
  for (int i = 0; i < inst.n; ++i) sum.add(x[i] != 0 ? inst.c[i] : 0.0);
  return sum.value();
}

// g(x) = max_t evaluate_cut(cut_t, x) + c . x, the master objective.
inline double master_objective(const QuadraticInstance& inst, std::span<const Cut> pool,
                               const BinaryPoint& x) {
  double z = evaluate_cut(pool[0], x);
  for (std::size_t t = 1; t < pool.size(); ++t) z = std::max(z, evaluate_cut(pool[t], x));
  return z + cost_term(inst, x);
}

}  // namespace qpcut::testing

#endif  // QPCUT_TESTS_FIXTURES_HPP
