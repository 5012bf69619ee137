#include <doctest.h>

#include "generators.hpp"
#include "s4/linalg.hpp"

using namespace s4;

TEST_CASE("fraction canonicalizes and rejects zero denominators") {
  CHECK(fraction(6, -4) == parse_rational("-3/2"));
  CHECK(to_string(fraction(6, -4)) == "-3/2");
  CHECK(to_string(fraction(0, 5)) == "0");
  CHECK(is_integer(fraction(10, 5)));
  CHECK_THROWS_AS(fraction(1, 0), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("floor, mod and binomial") {
  CHECK(floor(parse_rational("-7/2")) == -4);
  CHECK(mod(parse_rational("7/3"), 1) == parse_rational("1/3"));
  CHECK(mod(parse_rational("-1/3"), 2) == parse_rational("5/3"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("string round trip on random rationals") {
  auto rng = testing::make_rng(1);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testing::small_rational(rng);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("determinant, inverse and solve agree on random matrices") {
  auto rng = testing::make_rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = testing::small_rational(rng);
    const Rational det = determinant(m);
    CHECK((det == 0) == (rank(m) < n));
    if (det == 0) continue;
    const Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(n));
    CHECK(determinant(inv) == 1 / det);
    const Vector b = testing::small_vector(rng, n);
    const auto sol = solve(m, b);
    REQUIRE(sol.status == SolveStatus::unique);
    CHECK(m * sol.solution == b);
  }
}

TEST_CASE("nullspace vectors are annihilated and complete the rank") {
  auto rng = testing::make_rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = testing::small_int(rng, -1, 1);
    const auto kernel = nullspace(m);
    CHECK(kernel.size() + rank(m) == 5);
    for (const auto& v : kernel) CHECK(is_zero(m * v));
  }
}

TEST_CASE("solve reports inconsistent and underdetermined systems") {
  Matrix m = Matrix::from_rows({{1, 1}, {2, 2}});
  CHECK(solve(m, {1, 3}).status == SolveStatus::inconsistent);
  CHECK(solve(m, {1, 2}).status == SolveStatus::underdetermined);
  Matrix tall = Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  auto sol = solve(tall, {1, 2, 3});
  REQUIRE(sol.status == SolveStatus::unique);
  CHECK(sol.solution == Vector{1, 2});
}
