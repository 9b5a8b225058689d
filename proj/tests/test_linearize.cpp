#include <doctest.h>

#include <cmath>

#include "qpcut/bounds.hpp"
#include "qpcut/generator.hpp"
#include "qpcut/linearize.hpp"
#include "qpcut/oracle.hpp"
#include "support/fixtures.hpp"

using namespace qpcut;
using qpcut::testing::corpus_instance;
using qpcut::testing::make_e1;
using qpcut::testing::make_e2;

namespace {

double row_value(const LinkRow& row, const std::vector<double>& x) {
  double v = row.offset;
  for (std::size_t j = 0; j < x.size(); ++j) v += row.x_coeffs[j] * x[j];
  return v;
}

std::vector<double> to_real(const BinaryPoint& x) {
  return std::vector<double>(x.begin(), x.end());
}

BinaryPoint random_binary(SplitMix64& rng, int n) {
  BinaryPoint x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(rng.next() & 1u);
  return x;
}

std::vector<double> random_fractional(SplitMix64& rng, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = rng.next_unit();
  return x;
}

}  // namespace

TEST_CASE("PL1 rows substitute u") {
  const QuadraticInstance e1 = make_e1();
  const MixedModel m = build_pl1(e1, compute_bound_vectors(e1));
  REQUIRE(m.rows.size() == 6);
  // Row for i=0: y_0 >= x_1 + x_2 + 2 x_0 - 2.
  CHECK(m.rows[0].var == 0);
  CHECK(m.rows[0].x_coeffs == std::vector<double>{2.0, 1.0, 1.0});
  CHECK(m.rows[0].offset == -2.0);
  // Second family: y_0 >= 0.
  CHECK(m.rows[1].var == 0);
  CHECK(m.rows[1].x_coeffs == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(m.rows[1].offset == 0.0);
  CHECK(m.x_objective == e1.c);
}

TEST_CASE("PL1 binary optimum equals the quadratic optimum on E1") {
  const QuadraticInstance e1 = make_e1();
  const auto value = brute_force_mixed(build_pl1(e1, compute_bound_vectors(e1)), e1);
  REQUIRE(value.has_value());
  CHECK(*value == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("n=1 degenerate model") {
  QuadraticInstance inst;
  inst.n = 1;
  inst.b.assign(1, 0.0);
  inst.c = {-5.0};
  const BoundVectors bv = compute_bound_vectors(inst);
  CHECK(bv.u == std::vector<double>{0.0});
  const MixedModel m = build_pl1(inst, bv);
  CHECK(*brute_force_mixed(m, inst) == doctest::Approx(-5.0));
  inst.c = {3.0};
  CHECK(*brute_force_mixed(build_pl1(inst, compute_bound_vectors(inst)), inst) ==
        doctest::Approx(0.0));
}

TEST_CASE("PL2 and PL2' rows on E2") {
  const QuadraticInstance e2 = make_e2();
  const BoundVectors bv = compute_bound_vectors(e2);
  const MixedModel pl2 = build_pl2(e2, bv);
  CHECK(pl2.rows[0].x_coeffs == std::vector<double>{2.0, 1.0, 1.0});
  CHECK(pl2.rows[0].offset == -2.0);
  CHECK(pl2.rows[1].x_coeffs == std::vector<double>{1.0, 0.0, 0.0});  // y_0 >= l_0 x_0
  CHECK(pl2.rows[1].offset == 0.0);

  const MixedModel pl2p = build_pl2_prime(e2, bv);
  CHECK(pl2p.rows[0].x_coeffs == std::vector<double>{1.0, 1.0, 1.0});  // v - l = 1
  CHECK(pl2p.rows[0].offset == -2.0);
  CHECK(pl2p.rows[1].x_coeffs == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(pl2p.x_objective == std::vector<double>{1.0, 1.0, 1.0});  // l + c

  CHECK(*brute_force_mixed(pl2, e2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(*brute_force_mixed(pl2p, e2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("PL2 and PL2' optima coincide and map by t = y - l x") {
  SplitMix64 rng(5);
  for (int index : {2, 22, 41, 50}) {
    const QuadraticInstance inst = corpus_instance(index);
    const BoundVectors bv = compute_bound_vectors(inst);
    const MixedModel pl2 = build_pl2(inst, bv);
    const MixedModel pl2p = build_pl2_prime(inst, bv);
    const auto v2 = brute_force_mixed(pl2, inst);
    const auto v2p = brute_force_mixed(pl2p, inst);
    REQUIRE(v2.has_value());
    CHECK(std::abs(*v2 - *v2p) <= 1e-12);
    // Pointwise: optimal y and t for a fixed x differ by exactly l x.
    for (int draw = 0; draw < 10; ++draw) {
      const BinaryPoint x = random_binary(rng, inst.n);
      const auto xr = to_real(x);
      for (int i = 0; i < inst.n; ++i) {
        const double y = std::max(row_value(pl2.rows[2 * i], xr), row_value(pl2.rows[2 * i + 1], xr));
        const double t = std::max(row_value(pl2p.rows[2 * i], xr), 0.0);
        CHECK(std::abs((y - bv.l[i] * x[i]) - t) <= 1e-12);
      }
    }
  }
}

TEST_CASE("relaxation bounds: E1 values and Theorem-4 ordering on E2") {
  const QuadraticInstance e1 = make_e1();
  const BoundVectors bv1 = compute_bound_vectors(e1);
  const double r1 = relaxation_bound(e1, bv1, ModelVariant::kPl1);
  CHECK(r1 <= -2.0 + 1e-9);
  // u = v and l = 0 make PL1 and PL2 the same model on E1.
  const MixedModel a = build_pl1(e1, bv1);
  const MixedModel b = build_pl2(e1, bv1);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    CHECK(a.rows[r].x_coeffs == b.rows[r].x_coeffs);
    CHECK(a.rows[r].offset == b.rows[r].offset);
  }
  CHECK(std::abs(r1 - relaxation_bound(e1, bv1, ModelVariant::kPl2)) <= 1e-9);

  const QuadraticInstance e2 = make_e2();
  const BoundVectors bv2 = compute_bound_vectors(e2);
  const double pl1 = relaxation_bound(e2, bv2, ModelVariant::kPl1);
  const double pl2 = relaxation_bound(e2, bv2, ModelVariant::kPl2);
  CHECK(pl1 <= pl2 + 1e-9);
  CHECK(pl2 <= 2.0 + 1e-9);
  // The substituted form prices the same relaxation.
  CHECK(std::abs(pl2 - relaxation_bound(e2, bv2, ModelVariant::kPl2Prime)) <= 1e-9);
}

TEST_CASE("make_cut: BML coefficients on E1") {
  const QuadraticInstance e1 = make_e1();
  const BoundVectors bv = compute_bound_vectors(e1);
  const Cut cut = make_cut(CutVariant::kBml, {1, 1, 0}, e1, bv);
  CHECK(cut.coeffs == std::vector<double>{3.0, 3.0, 2.0});
  CHECK(cut.offset == 4.0);
  const Cut zero = make_cut(CutVariant::kBml, {0, 0, 0}, e1, bv);
  CHECK(zero.coeffs == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(zero.offset == 0.0);
  for (double coeff : cut.coeffs) CHECK(coeff >= 0.0);
  CHECK_THROWS_AS(make_cut(CutVariant::kBml, {2, 0, 1}, e1, bv), std::invalid_argument);
  CHECK_THROWS_AS(make_cut(CutVariant::kBml, {1, 0}, e1, bv), std::invalid_argument);
}

TEST_CASE("make_cut: improved coefficients on E2") {
  const QuadraticInstance e2 = make_e2();
  const BoundVectors bv = compute_bound_vectors(e2);
  const Cut cut = make_cut(CutVariant::kImproved, {1, 1, 0}, e2, bv);
  CHECK(cut.coeffs == std::vector<double>{3.0, 3.0, 3.0});
  CHECK(cut.offset == 4.0);
}

TEST_CASE("evaluate_cut at the generating point recovers the quadratic term") {
  const QuadraticInstance e1 = make_e1();
  const BoundVectors bv1 = compute_bound_vectors(e1);
  const Cut bml = make_cut(CutVariant::kBml, {1, 1, 0}, e1, bv1);
  CHECK(evaluate_cut(bml, BinaryPoint{1, 1, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(evaluate_cut(bml, BinaryPoint{0, 0, 0}) == doctest::Approx(0.0));

  const QuadraticInstance e2 = make_e2();
  const BoundVectors bv2 = compute_bound_vectors(e2);
  const Cut imp = make_cut(CutVariant::kImproved, {1, 1, 0}, e2, bv2);
  CHECK(evaluate_cut(imp, BinaryPoint{1, 1, 0}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("self-evaluation identity on random instances") {
  SplitMix64 rng(11);
  for (int index = 0; index < 54; index += 5) {
    const QuadraticInstance inst = corpus_instance(index);
    const BoundVectors bv = compute_bound_vectors(inst);
    for (int draw = 0; draw < 20; ++draw) {
      const BinaryPoint lambda = random_binary(rng, inst.n);
      const double quad = quadratic_term(inst, lambda);
      for (CutVariant variant : {CutVariant::kBml, CutVariant::kImproved}) {
        const Cut cut = make_cut(variant, lambda, inst, bv);
        CHECK(std::abs(evaluate_cut(cut, lambda) - quad) <= 1e-12);
      }
    }
  }
}

TEST_CASE("cuts under-estimate the quadratic term on feasible points") {
  for (int index : {0, 2, 4, 19, 21, 38, 40}) {
    const QuadraticInstance inst = corpus_instance(index);
    if (inst.n > 8) continue;
    const BoundVectors bv = compute_bound_vectors(inst);
    const auto feasible = enumerate_feasible(inst);
    const std::uint64_t total = std::uint64_t{1} << inst.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      BinaryPoint lambda(static_cast<std::size_t>(inst.n));
      for (int i = 0; i < inst.n; ++i) {
        lambda[i] = static_cast<std::uint8_t>((mask >> (inst.n - 1 - i)) & 1u);
      }
      const Cut bml = make_cut(CutVariant::kBml, lambda, inst, bv);
      const Cut imp = make_cut(CutVariant::kImproved, lambda, inst, bv);
      for (const BinaryPoint& x : feasible) {
        const double quad = quadratic_term(inst, x);
        CHECK(evaluate_cut(bml, x) <= quad + 1e-9);
        CHECK(evaluate_cut(imp, x) <= quad + 1e-9);
      }
    }
  }
}

TEST_CASE("improved cuts dominate BML cuts over the whole box") {
  SplitMix64 rng(23);
  for (int index = 0; index < 54; index += 3) {
    const QuadraticInstance inst = corpus_instance(index);
    const BoundVectors bv = compute_bound_vectors(inst);
    bool fallback = false;
    bool all_positive_l = true;
    for (int i = 0; i < inst.n; ++i) {
      fallback |= bv.v_fallback[i] != 0 || bv.l_fallback[i] != 0;
      all_positive_l &= bv.l[i] > 0.0;
    }
    for (int draw = 0; draw < 50; ++draw) {
      const BinaryPoint lambda = random_binary(rng, inst.n);
      const Cut bml = make_cut(CutVariant::kBml, lambda, inst, bv);
      const Cut imp = make_cut(CutVariant::kImproved, lambda, inst, bv);
      const std::vector<double> x = random_fractional(rng, inst.n);
      const double vb = evaluate_cut(bml, std::span<const double>(x));
      const double vi = evaluate_cut(imp, std::span<const double>(x));
      CHECK(vi >= vb - 1e-12);
      double slack = 0.0;
      for (int i = 0; i < inst.n; ++i) slack += bv.l[i] * (1.0 - lambda[i]) * x[i];
      if (all_positive_l && !fallback && slack > 1e-9) {
        CHECK(vi > vb);
      }
    }
  }
}

TEST_CASE("pointwise max identity for the PL2 rows") {
  for (int index : {0, 19, 38}) {
    const QuadraticInstance inst = corpus_instance(index);
    if (inst.n > 10) continue;
    const BoundVectors bv = compute_bound_vectors(inst);
    for (const BinaryPoint& x : enumerate_feasible(inst)) {
      for (int i = 0; i < inst.n; ++i) {
        if (bv.v_fallback[i] != 0 || bv.l_fallback[i] != 0) continue;
        double row = 0.0;
        for (int j = 0; j < inst.n; ++j) {
          if (j != i && x[j] != 0) row += inst.b_at(i, j);
        }
        const double lhs = x[i] != 0 ? row : 0.0;
        const double rhs = std::max(row + bv.v[i] * x[i] - bv.v[i], bv.l[i] * x[i]);
        CHECK(std::abs(lhs - rhs) <= 1e-9);
      }
    }
  }
}

TEST_CASE("every PL2-feasible point satisfies the PL1 rows") {
  SplitMix64 rng(31);
  for (int index : {1, 20, 39}) {
    const QuadraticInstance inst = corpus_instance(index);
    const BoundVectors bv = compute_bound_vectors(inst);
    const MixedModel pl1 = build_pl1(inst, bv);
    const MixedModel pl2 = build_pl2(inst, bv);
    // Sample PL2-feasible points: fractional x in the relaxation's box with
    // y at the PL2 row maximum (feasible by construction), plus slack.
    for (int draw = 0; draw < 40; ++draw) {
      const std::vector<double> x = random_fractional(rng, inst.n);
      for (int i = 0; i < inst.n; ++i) {
        const double y = std::max(row_value(pl2.rows[2 * i], x), row_value(pl2.rows[2 * i + 1], x)) +
                         rng.next_unit();
        CHECK(y >= row_value(pl1.rows[2 * i], x) - 1e-12);
        CHECK(y >= row_value(pl1.rows[2 * i + 1], x) - 1e-12);
      }
    }
  }
}

TEST_CASE("binary optima of PL1 and PL2 equal the brute-force optimum") {
  for (int index = 0; index < 54; index += 7) {
    const QuadraticInstance inst = corpus_instance(index);
    if (inst.n > 10) continue;
    const BoundVectors bv = compute_bound_vectors(inst);
    const auto target = brute_force(inst);
    REQUIRE(target.has_value());
    const auto v1 = brute_force_mixed(build_pl1(inst, bv), inst);
    const auto v2 = brute_force_mixed(build_pl2(inst, bv), inst);
    CHECK(std::abs(*v1 - target->value) <= 1e-9);
    CHECK(std::abs(*v2 - target->value) <= 1e-9);
  }
}
