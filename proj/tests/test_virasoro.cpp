#include <doctest.h>

#include "generators.hpp"
#include "s4/classification.hpp"
#include "s4/virasoro.hpp"

using namespace s4;

namespace {

VirasoroState random_vacuum_state(std::mt19937_64& rng, const Rational& c, int degree) {
  VirasoroState s{{}, degree, c};
  for (const auto& b : vacuum_basis(degree, c)) s += testing::small_rational(rng) * b;
  return s;
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("vacuum monomials and basis sizes") {
  CHECK(vacuum_monomials(4) == std::vector<VirasoroMonomial>{{4}, {2, 2}});
  const std::vector<std::size_t> sizes{1, 0, 1, 1, 2, 2, 4, 4, 7};
  for (int n = 0; n <= 8; ++n) CHECK(vacuum_monomials(n).size() == sizes[static_cast<std::size_t>(n)]);
  CHECK(vacuum_monomial(1, {1, 2}).is_zero());
  CHECK(vacuum_monomial(1, {2, 4}) == vacuum_monomial(1, {4, 2}));
  CHECK(translate(vacuum_state(1)).is_zero());
}

TEST_CASE("Virasoro commutator relation on random vacuum states") {
  auto rng = testing::make_rng(40);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational c = testing::small_rational(rng);
    const int degree = static_cast<int>(testing::small_int(rng, 2, 5));
    const auto s = random_vacuum_state(rng, c, degree);
    const int m = static_cast<int>(testing::small_int(rng, -1, 3));
    const int n = static_cast<int>(testing::small_int(rng, -2, 3));
    CAPTURE(c);
    CAPTURE(m);
    CAPTURE(n);
    auto lhs = apply_L(m, apply_L(n, s)) - apply_L(n, apply_L(m, s));
    auto rhs = Rational(m - n) * apply_L(m + n, s);
    if (m + n == 0) rhs += (c / 12 * (m * m * m - m)) * s;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contravariant form is symmetric and L(n) is adjoint to L(-n)") {
  auto rng = testing::make_rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational c = testing::small_rational(rng);
    const int n = static_cast<int>(testing::small_int(rng, 1, 3));
    const auto a = random_vacuum_state(rng, c, 4);
    const auto b = random_vacuum_state(rng, c, 4 - n);
    CHECK(vacuum_pairing(a, apply_L(-n, b)) == vacuum_pairing(apply_L(n, a), b));
    const auto a2 = random_vacuum_state(rng, c, 4);
    CHECK(vacuum_pairing(a, a2) == vacuum_pairing(a2, a));
  }
  CHECK(vacuum_pairing(vacuum_state(3), vacuum_state(3)) == 1);
}

TEST_CASE("Gram determinants in low degree") {
  auto rng = testing::make_rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational c = testing::small_rational(rng);
    CHECK(determinant(gram_matrix(2, c)) == c / 2);
    CHECK(determinant(gram_matrix(3, c)) == 2 * c);
    CHECK(determinant(gram_matrix(4, c)) == c * c * (5 * c + 22) / 2);
    for (int n = 2; n <= 6; ++n) CHECK(evaluate(gram_determinant_polynomial(n), c) == determinant(gram_matrix(n, c)));
  }
  CHECK(determinant(gram_matrix(4, 1)) == fraction(27, 2));
  CHECK(determinant(gram_matrix(4, parse_rational("-22/5"))) == 0);
}

TEST_CASE("Gram roots are degenerate central charges") {
  const auto r4 = gram_determinant_roots(4);
  CHECK(r4.residual_degree == 0);
  CHECK(r4.leading_coefficient == fraction(5, 2));
  CHECK(r4.roots == std::vector<std::pair<Rational, int>>{{parse_rational("-22/5"), 1}, {0, 2}});
  for (int n = 2; n <= 6; ++n) {
    const auto r = gram_determinant_roots(n);
    CHECK(r.residual_degree == 0);
    for (const auto& [root, mult] : r.roots) {
      CHECK(evaluate(gram_determinant_polynomial(n), root) == 0);
      bool listed = false;
      for (long k = 1; k <= n; ++k)
        for (const auto& x : degenerate_central_charges(k)) listed = listed || x == root;
      CHECK(listed);
    }
  }
}

TEST_CASE("Casimir coefficients against the closed forms") {
  auto rng = testing::make_rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational c = testing::nonzero_rational(rng);
    if (c == parse_rational("-22/5") || c == parse_rational("-68/7") || c == parse_rational("-2/5")) continue;
    const Rational d = testing::small_int(rng, 1, 60);
    const auto k2 = casimir_coefficients(c, d, 2);
    CHECK(k2.coefficient({2}) == 2 * d / c);
    const auto k3 = casimir_coefficients(c, d, 3);
    CHECK(k3.coefficient({3}) == d / c);
    const auto k4 = casimir_coefficients(c, d, 4);
    CHECK(k4.coefficient({2, 2}) == 12 * d / (c * (5 * c + 22)));
    CHECK(k4.coefficient({4}) == 3 * d * (c + 2) / (c * (5 * c + 22)));
    for (int n = 2; n <= 4; ++n) CHECK(casimir_report(c, d, n).matches);
  }
}

TEST_CASE("Casimir elements satisfy the lowering relations") {
  const Rational c = fraction(14, 5), d = 14;
  for (int n = 2; n <= 6; ++n) {
    const auto kn = casimir_coefficients(c, d, n);
    for (int m = 1; m < n - 1; ++m) CHECK(apply_L(m, kn) == Rational(n - 1) * casimir_coefficients(c, d, n - m));
    CHECK(apply_L(n, kn) == Rational(n - 1) * d * vacuum_state(c));
    if (n >= 2) CHECK(apply_L(n - 1, kn).is_zero());
  }
}

TEST_CASE("worked Casimir example at c = 1, d = 3") {
  const auto k4 = casimir_coefficients(1, 3, 4);
  CHECK(k4.to_string() == "4/3*L(-2)L(-2)1 + 1*L(-4)1");
  CHECK(casimir_coefficients(1, 3, 2) == 6 * vacuum_monomial(1, {2}));
  CHECK(casimir_coefficients(1, 3, 3) == 3 * vacuum_monomial(1, {3}));
  CHECK_THROWS_AS(casimir_coefficients(parse_rational("-22/5"), 3, 4), Error);
  CHECK_THROWS_AS(casimir_coefficients(0, 3, 2), Error);
}

TEST_CASE("zero-mode traces of degree-4 descendants on weight-one primaries") {
  auto rng = testing::make_rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational c = testing::nonzero_rational(rng);
    const Rational d = testing::small_int(rng, 1, 248);
    const Rational h = 1;
    CHECK(descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {4}), d) == 3 * h * d);
    CHECK(descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {2, 2}), d) == (h * h + 2 * h) * d);
    const auto s = random_vacuum_state(rng, c, 4);
    CHECK(descendant_zero_mode_trace_on_primaries(s, d) ==
          s.coefficient({4}) * 3 * d + s.coefficient({2, 2}) * 3 * d);
  }
  CHECK_THROWS_AS(descendant_zero_mode_trace_on_primaries(vacuum_monomial(1, {2}), 3), Error);
}
