#include <doctest.h>

#include "generators.hpp"
#include "s4/lie_algebra.hpp"

using namespace s4;

namespace {

Rational dense_trace(const LieAlgebra& g, const std::vector<Vector>& args) {
  Matrix acc = Matrix::identity(g.dim());
  for (const auto& x : args) acc = acc * g.ad_matrix(x);
  Rational t = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) t += acc(i, i);
  return t;
}

Vector random_element(const LieAlgebra& g, std::mt19937_64& rng) { return random_small_vector(rng, g.dim()); }

}  // namespace

TEST_CASE("Chevalley basis dimensions and A1 brackets") {
  const auto a1 = build_chevalley(build_root_system("A1"));
  REQUIRE(a1.dim() == 3);
  const Vector e = a1.basis_vector(a1.root_vector(0, false));
  const Vector f = a1.basis_vector(a1.root_vector(0, true));
  const Vector h = a1.basis_vector(a1.cartan_index(0));
  CHECK(a1.bracket(e, f) == h);
  CHECK(a1.bracket(h, e) == Vector{2, 0, 0});
  CHECK(a1.bracket(h, f) == Vector{0, 0, -2});
  CHECK(a1.form(e, f) == 1);
  CHECK(a1.form(h, h) == 2);
  CHECK(a1.central_charge_level1() == 1);
  for (const char* label : {"A2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    const auto rs = build_root_system(label);
    CHECK(build_chevalley(rs).dim() == static_cast<std::size_t>(rs.type.dimension()));
  }
}

TEST_CASE("structure constants satisfy the Lie algebra axioms") {
  for (const char* label : {"A1", "A2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(label);
    const auto report = check_structure(build_chevalley(build_root_system(label)));
    CHECK(report.passed());
    CHECK_FALSE(report.counterexample.has_value());
  }
}

TEST_CASE("Killing relation through dense ad matrices") {
  auto rng = testing::make_rng(20);
  for (const char* label : {"A2", "B3", "C3", "G2", "D4", "F4"}) {
    const auto g = build_chevalley(build_root_system(label));
    for (int trial = 0; trial < 5; ++trial) {
      const Vector x = random_element(g, rng), y = random_element(g, rng);
      CHECK(dense_trace(g, {x, y}) == 2 * g.dual_coxeter() * g.form(x, y));
    }
    CHECK(check_killing_relation(g));
  }
}

TEST_CASE("sparse traces agree with dense matrix products") {
  auto rng = testing::make_rng(21);
  for (const char* label : {"A2", "G2", "B3"}) {
    const auto g = build_chevalley(build_root_system(label));
    for (int m = 1; m <= 5; ++m) {
      std::vector<Vector> args;
      for (int k = 0; k < m; ++k) args.push_back(random_element(g, rng));
      CHECK(trace_ad_product(g, args) == dense_trace(g, args));
    }
  }
}

TEST_CASE("quartic trace identity on the exceptional series via dense traces") {
  auto rng = testing::make_rng(22);
  for (const char* label : {"A1", "A2", "G2", "D4", "F4"}) {
    CAPTURE(label);
    const auto g = build_chevalley(build_root_system(label));
    const Rational c = g.central_charge_level1();
    const Rational d = static_cast<long>(g.dim());
    const Rational k = c * (22 + 5 * c);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Vector> a;
      for (int i = 0; i < 4; ++i) a.push_back(random_element(g, rng));
      const Rational P = g.form(g.bracket(a[0], a[1]), g.bracket(a[2], a[3]));
      const Rational Q = g.form(g.bracket(a[0], a[3]), g.bracket(a[1], a[2]));
      const Rational S = g.form(a[0], a[1]) * g.form(a[2], a[3]) + g.form(a[0], a[2]) * g.form(a[1], a[3]) +
                         g.form(a[0], a[3]) * g.form(a[1], a[2]);
      const Rational expected = (1 + 3 * d * (c - 2) / k) * P + (2 - 24 * d / k) * Q + 24 * d / k * S;
      CHECK(dense_trace(g, a) == expected);
      CHECK(trace_formula_rhs(g, c, d, a, 4) == expected);
    }
  }
}

TEST_CASE("quadratic and cubic identities hold for every simple type") {
  auto rng = testing::make_rng(23);
  for (const char* label : {"B3", "C3", "A3"}) {
    const auto g = build_chevalley(build_root_system(label));
    const Rational c = g.central_charge_level1();
    const Rational d = static_cast<long>(g.dim());
    const Vector x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
    CHECK(dense_trace(g, {x, y}) == 2 * (d / c - 1) * g.form(x, y));
    CHECK(dense_trace(g, {x, y, z}) == (d / c - 1) * g.form(x, g.bracket(y, z)));
  }
}

TEST_CASE("the quartic identity fails outside the exceptional series") {
  for (const char* label : {"B3", "C3"}) {
    CAPTURE(label);
    const auto g = build_chevalley(build_root_system(label));
    SamplerConfig config;
    config.samples = 10;
    const auto report = verify_trace_formulas(g, config);
    CHECK_FALSE(report.passed);
    CHECK(report.counterexample.has_value());
  }
}

TEST_CASE("reversal symmetry and vanishing odd powers") {
  auto rng = testing::make_rng(24);
  const auto g = build_chevalley(build_root_system("B3"));
  for (int m = 2; m <= 5; ++m) {
    std::vector<Vector> a;
    for (int i = 0; i < m; ++i) a.push_back(random_element(g, rng));
    std::vector<Vector> reversed(a.rbegin(), a.rend());
    CHECK(trace_ad_product(g, a) == (m % 2 == 0 ? 1 : -1) * trace_ad_product(g, reversed));
  }
  const Vector x = random_element(g, rng);
  CHECK(trace_ad_product(g, std::vector<Vector>{x, x, x}) == 0);
  CHECK(trace_ad_product(g, std::vector<Vector>(5, x)) == 0);
}

TEST_CASE("trace formula excluded central charges") {
  const auto g = build_chevalley(build_root_system("A1"));
  const std::vector<Vector> a(4, g.basis_vector(0));
  CHECK_THROWS_AS(trace_formula_rhs(g, 0, 3, a, 4), Error);
  CHECK_THROWS_AS(trace_formula_rhs(g, parse_rational("-22/5"), 3, a, 4), Error);
  CHECK_NOTHROW(trace_formula_rhs(g, parse_rational("-22/5"), 3, std::vector<Vector>(2, g.basis_vector(0)), 2));
}

TEST_CASE("sampled verification is reproducible and respects the seed") {
  const auto g = build_chevalley(build_root_system("D4"));
  SamplerConfig config;
  config.samples = 5;
  const auto a = to_json(verify_trace_formulas(g, config));
  const auto b = to_json(verify_trace_formulas(g, config));
  CHECK(a == b);
  CHECK(a.at("seed") == kDefaultSeed);
  std::mt19937_64 rng(7);
  for (const auto& x : random_small_vector(rng, 50)) CHECK((x >= -2 && x <= 2 && is_integer(x)));
}

TEST_CASE("exhaustive mode is the default for small algebras") {
  const auto report = verify_trace_formulas(build_chevalley(build_root_system("A1")), SamplerConfig{});
  CHECK(report.exhaustive);
  CHECK(report.quadruples == 81);
  CHECK(report.passed);
}
