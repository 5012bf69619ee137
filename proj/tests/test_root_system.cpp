#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "s4/root_system.hpp"

using namespace s4;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

// Dual Coxeter numbers from the standard table.
int expected_dual_coxeter(const CartanType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 9;
    case Family::G: return 4;
  }
  return 0;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t expected_weyl_order(const CartanType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (1ULL << n) * factorial(n);
    case Family::D: return (1ULL << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

Matrix to_matrix(const WeylElement& w, int rank) {
  Matrix m(rank, rank);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rank; ++c) m(r, c) = w.matrix[r * rank + c];
  return m;
}

}  // namespace

TEST_CASE("type labels parse and reject unsupported ranks") {
  CHECK(CartanType::parse("g2").label() == "G2");
  CHECK(CartanType::parse("E8").dimension() == 248);
  CHECK_THROWS_AS(CartanType::parse("E9"), Error);
  CHECK_THROWS_AS(CartanType::parse("F3"), Error);
  CHECK_THROWS_AS(CartanType::parse("B1"), Error);
  CHECK_THROWS_AS(CartanType::parse("X2"), Error);
}

TEST_CASE("root counts, dual Coxeter numbers and the strange formula") {
  for (const char* label : kTypes) {
    CAPTURE(label);
    const auto rs = build_root_system(label);
    const auto dim = rs.type.dimension();
    CHECK(rs.dimension() == static_cast<std::size_t>(dim));
    CHECK(rs.dual_coxeter == expected_dual_coxeter(rs.type));
    // |rho|^2 = h^vee dim g / 12 with long roots of squared length 2.
    CHECK(rs.norm2(rs.rho) == fraction(rs.dual_coxeter * dim, 12));
    CHECK(rs.norm2(rs.highest_root) == 2);
  }
}

TEST_CASE("Cartan entries follow the Gram matrix") {
  for (const char* label : kTypes) {
    const auto rs = build_root_system(label);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(Rational(rs.cartan[i][j]) == 2 * rs.gram(i, j) / rs.gram(i, i));
  }
  const auto b3 = build_root_system("B3");
  CHECK(b3.gram(2, 2) == 1);
  const auto g2 = build_root_system("G2");
  CHECK(g2.gram(0, 0) == fraction(2, 3));
}

TEST_CASE("positive roots are closed under simple reflections up to sign") {
  for (const char* label : kTypes) {
    const auto rs = build_root_system(label);
    for (const auto& beta : rs.positive_roots)
      for (int i = 0; i < rs.rank; ++i) {
        IntVector image = beta;
        image[i] -= rs.coroot_pairing(beta, i);
        IntVector negated = image;
        for (auto& x : negated) x = -x;
        CHECK((rs.is_root(image) || rs.is_root(negated)));
      }
  }
}

TEST_CASE("Weyl group orders match the product formula") {
  for (const char* label : {"A1", "A2", "A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const auto rs = build_root_system(label);
    CHECK(enumerate_weyl_group(rs).size() == expected_weyl_order(rs.type));
    CHECK(weyl_group_order(rs.type) == expected_weyl_order(rs.type));
  }
  CHECK(weyl_group_order(CartanType::parse("E8")) == expected_weyl_order(CartanType::parse("E8")));
  CHECK_THROWS_AS(enumerate_weyl_group(build_root_system("E7")), Error);
}

TEST_CASE("random Weyl words preserve the form and the sign is the determinant") {
  auto rng = testing::make_rng(10);
  for (const char* label : {"B3", "G2", "F4", "E6"}) {
    const auto rs = build_root_system(label);
    const auto group = enumerate_weyl_group(rs);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& w = group[rng() % group.size()];
      const Matrix m = to_matrix(w, rs.rank);
      CHECK(m.transpose() * rs.gram * m == rs.gram);
      CHECK(determinant(m) == w.sign());
      CHECK(rho_displacement(rs, w) == 2 * rs.norm2(rs.rho) - 2 * rs.inner(apply(w, rs.rank, rs.rho), rs.rho));
    }
  }
}

TEST_CASE("full census sums to the group order with zero signed total") {
  for (const char* label : {"A2", "B3", "G2", "F4"}) {
    const auto rs = build_root_system(label);
    long total = 0, signed_total = 0;
    for (const auto& cell : rho_displacement_census(rs, std::nullopt)) {
      total += static_cast<long>(cell.count);
      signed_total += cell.sign * static_cast<long>(cell.count);
    }
    CHECK(total == static_cast<long>(expected_weyl_order(rs.type)));
    CHECK(signed_total == 0);
  }
}

TEST_CASE("G2 census below 12 matches the printed table") {
  const auto census = rho_displacement_census(build_root_system("G2"), Rational(12));
  const std::vector<std::tuple<const char*, int, std::size_t>> printed = {
      {"0", 1, 1}, {"2/3", -1, 1}, {"2", -1, 1}, {"14/3", 1, 2}, {"8", -1, 1}, {"32/3", -1, 1}};
  REQUIRE(census.size() == printed.size());
  for (std::size_t i = 0; i < printed.size(); ++i) {
    CHECK(census[i].norm == parse_rational(std::get<0>(printed[i])));
    CHECK(census[i].sign == std::get<1>(printed[i]));
    CHECK(census[i].count == std::get<2>(printed[i]));
  }
}

TEST_CASE("F4 census below 10 against the printed table") {
  const auto census = rho_displacement_census(build_root_system("F4"), Rational(10));
  std::map<std::pair<Rational, int>, std::size_t> got;
  for (const auto& cell : census) got[{cell.norm, cell.sign}] = cell.count;
  // Eleven printed cells agree; (9,-) and (10,+) are printed as 4 and 2.
  CHECK(got[{0, 1}] == 1);
  CHECK(got[{1, -1}] == 2);
  CHECK(got[{2, -1}] == 2);
  CHECK(got[{3, 1}] == 5);
  CHECK(got[{4, -1}] == 1);
  CHECK(got[{5, 1}] == 2);
  CHECK(got[{5, -1}] == 2);
  CHECK(got[{6, 1}] == 3);
  CHECK(got[{7, -1}] == 4);
  CHECK(got[{8, -1}] == 2);
  CHECK(got[{9, 1}] == 1);
  CHECK(got[{9, -1}] == 5);
  CHECK(got[{10, 1}] == 3);
  CHECK(got.size() == 13);
}

TEST_CASE("monotonicity of the rho displacement") {
  for (const char* label : {"A3", "B3", "C3", "G2", "F4"}) {
    const auto report = check_rho_monotonicity(build_root_system(label));
    CHECK(report.passed);
    CHECK(report.elements_checked == expected_weyl_order(build_root_system(label).type));
  }
}

TEST_CASE("Weyl balls agree with filtering the whole group") {
  for (const char* label : {"G2", "F4", "D4"}) {
    const auto rs = build_root_system(label);
    const Rational bound = 10;
    std::size_t filtered = 0;
    for (const auto& w : enumerate_weyl_group(rs))
      if (rho_displacement(rs, w) <= bound) ++filtered;
    CHECK(enumerate_weyl_ball(rs, bound).size() == filtered);
  }
}

TEST_CASE("D4 change of basis is inverse") {
  CHECK(d4_simple_roots_in_standard_basis() * d4_standard_to_simple_roots() == Matrix::identity(4));
}
