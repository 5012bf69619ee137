#include <doctest.h>

#include "s4/q_series.hpp"

using namespace s4;

namespace {

std::vector<long> partitions(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  return p;
}

long pentagonal_coefficient(long n) {
  for (long k = -20; k <= 20; ++k)
    if (k * (3 * k - 1) / 2 == n) return k % 2 == 0 ? 1 : -1;
  return 0;
}

void check_prefix(const PuiseuxSeries& s, const std::vector<long>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    CAPTURE(i);
    CHECK(s.coefficient(static_cast<long>(i)) == coeffs[i]);
  }
}

}  // namespace

TEST_CASE("Euler function matches the pentagonal number theorem") {
  const auto e = euler_function(40);
  for (long n = 0; n < 40; ++n) CHECK(e.coefficient(n) == pentagonal_coefficient(n));
  CHECK_THROWS_AS(e.coefficient(40), Error);
}

TEST_CASE("inverse of the Euler function counts partitions") {
  const auto p = partitions(30);
  const auto inv = euler_function(31).inverse();
  for (int n = 0; n <= 30; ++n) CHECK(inv.coefficient(n) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("vacuum Virasoro series is p(n) - p(n-1)") {
  const auto p = partitions(20);
  const auto v = vomega_series(21);
  CHECK(v.coefficient(0) == 1);
  for (int n = 1; n <= 20; ++n)
    CHECK(v.coefficient(n) == p[static_cast<std::size_t>(n)] - p[static_cast<std::size_t>(n - 1)]);
  check_prefix(vomega_series(9), {1, 0, 1, 1, 2, 2, 4, 4, 7});
}

TEST_CASE("series arithmetic properties") {
  const Rational order = 12;
  const auto a = euler_function(order).shifted(fraction(1, 3));
  const auto b = (PuiseuxSeries::one(order) - PuiseuxSeries::monomial(2, fraction(1, 2), order));
  CHECK(a * b == b * a);
  CHECK((a * b).truncated(6) == (b * a).truncated(6));
  CHECK((b * b.inverse()).truncated(order) == PuiseuxSeries::one(order));
  CHECK(b.pow(3) == b * b * b);
  CHECK(a.substitute(2).coefficient(fraction(2, 3)) == 1);
  CHECK(eta(1, 10).valuation() == fraction(1, 24));
  CHECK_THROWS_AS(PuiseuxSeries(5).inverse(), Error);
}

TEST_CASE("printed G2 and F4 string functions") {
  const auto g2_short = string_function(CartanType::parse("G2"), StringClass::short_root, 6);
  CHECK(g2_short.valuation() == fraction(-7, 60) + fraction(2, 3));
  const auto g2_even = string_function(CartanType::parse("G2"), StringClass::even, 7);
  CHECK(g2_even.valuation() == fraction(-7, 60));
  const std::vector<long> short_coeffs{1, 3, 9, 21, 48, 99};
  const std::vector<long> even_coeffs{1, 2, 6, 14, 32, 66, 135};
  for (std::size_t i = 0; i < short_coeffs.size(); ++i)
    CHECK(g2_short.coefficient(*g2_short.valuation() + static_cast<long>(i)) == short_coeffs[i]);
  for (std::size_t i = 0; i < even_coeffs.size(); ++i)
    CHECK(g2_even.coefficient(*g2_even.valuation() + static_cast<long>(i)) == even_coeffs[i]);

  const auto f4_short = string_function(CartanType::parse("F4"), StringClass::short_root, 5);
  const auto f4_even = string_function(CartanType::parse("F4"), StringClass::even, 6);
  CHECK(f4_short.valuation() == fraction(-13, 60) + fraction(1, 2));
  CHECK(f4_even.valuation() == fraction(-13, 60));
  const std::vector<long> f4_short_coeffs{1, 6, 25, 86, 261};
  const std::vector<long> f4_even_coeffs{1, 4, 17, 56, 172, 476};
  for (std::size_t i = 0; i < f4_short_coeffs.size(); ++i)
    CHECK(f4_short.coefficient(*f4_short.valuation() + static_cast<long>(i)) == f4_short_coeffs[i]);
  for (std::size_t i = 0; i < f4_even_coeffs.size(); ++i)
    CHECK(f4_even.coefficient(*f4_even.valuation() + static_cast<long>(i)) == f4_even_coeffs[i]);
}

TEST_CASE("fixed-point graded dimensions match the printed series") {
  check_prefix(fixed_point_graded_dimension(CartanType::parse("A1"), 9), {1, 0, 1, 1, 2, 2, 4, 4, 7});
  check_prefix(fixed_point_graded_dimension(CartanType::parse("A2"), 7), {1, 0, 1, 2, 3, 4, 8});
  check_prefix(fixed_point_graded_dimension(CartanType::parse("D4"), 7), {1, 0, 1, 1, 4, 4, 9});
  check_prefix(fixed_point_graded_dimension(CartanType::parse("G2"), 7), {1, 0, 1, 1, 2, 2, 5});
  check_prefix(fixed_point_graded_dimension(CartanType::parse("F4"), 6), {1, 0, 1, 1, 2, 2});
  check_prefix(reference_series(CartanType::parse("E6")), {1, 0, 1, 1, 2, 3, 6});
  check_prefix(reference_series(CartanType::parse("E7")), {1, 0, 1, 1, 2, 2, 5});
  check_prefix(reference_series(CartanType::parse("E8")), {1, 0, 1, 1, 2, 2, 4});
}

TEST_CASE("class S_n degrees") {
  CHECK(class_sn_degree(fixed_point_graded_dimension(CartanType::parse("A2"), 7)).degree == 2);
  CHECK(class_sn_degree(fixed_point_graded_dimension(CartanType::parse("A2"), 7)).certified);
  CHECK(class_sn_degree(fixed_point_graded_dimension(CartanType::parse("D4"), 7)).degree == 3);
  CHECK(class_sn_degree(fixed_point_graded_dimension(CartanType::parse("G2"), 7)).degree == 5);
  CHECK(class_sn_degree(reference_series(CartanType::parse("E6"))).degree == 4);
  CHECK(class_sn_degree(reference_series(CartanType::parse("E7"))).degree == 5);
  const auto e8 = class_sn_degree(reference_series(CartanType::parse("E8")));
  CHECK(e8.degree == 6);
  CHECK_FALSE(e8.certified);
  const auto e8_long = class_sn_degree(extended_reference_series(CartanType::parse("E8"), 9));
  CHECK(e8_long.certified);
  CHECK(e8_long.degree == 7);
  const auto vir = class_sn_degree(vomega_series(9));
  CHECK_FALSE(vir.certified);
  CHECK_THROWS_AS(class_sn_degree(vomega_series(2)), Error);
}
