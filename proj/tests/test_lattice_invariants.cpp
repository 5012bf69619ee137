#include <doctest.h>

#include "s4/lattice_invariants.hpp"

using namespace s4;

namespace {

long colored_partitions(std::size_t rank, int degree) {
  std::vector<long> dp(static_cast<std::size_t>(degree) + 1, 0);
  dp[0] = 1;
  for (int k = 1; k <= degree; ++k)
    for (std::size_t color = 0; color < rank; ++color)
      for (int m = k; m <= degree; ++m) dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - k)];
  return dp[static_cast<std::size_t>(degree)];
}

Rational averaged_trace(const FiniteMatrixGroup& group, int degree) {
  const auto space = graded_monomial_space(group.rank, degree);
  Rational total = 0;
  for (const auto& g : group.elements) {
    const Matrix m = action_matrix(space, g);
    for (std::size_t i = 0; i < space.size(); ++i) total += m(i, i);
  }
  return total / static_cast<long>(group.order());
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(lattice_automorphism_group(Lattice::A2, Subgroup::full).order() == 12);
  CHECK(lattice_automorphism_group(Lattice::A2, Subgroup::W).order() == 6);
  CHECK(lattice_automorphism_group(Lattice::A2, Subgroup::minus_tau).order() == 4);
  CHECK(lattice_automorphism_group(Lattice::A2, Subgroup::trivial).order() == 1);
  CHECK(lattice_automorphism_group(Lattice::D4, Subgroup::E).order() == 8);
  CHECK(lattice_automorphism_group(Lattice::D4, Subgroup::W).order() == 192);
  CHECK(lattice_automorphism_group(Lattice::D4, Subgroup::H).order() == 6);
  CHECK(lattice_automorphism_group(Lattice::D4, Subgroup::full).order() == 1152);
  CHECK_THROWS_AS(lattice_automorphism_group(Lattice::A2, Subgroup::E), Error);
  CHECK_THROWS_AS(parse_subgroup("Z"), Error);
}

TEST_CASE("group elements preserve the lattice form") {
  for (auto [lattice, sub] : {std::pair{Lattice::A2, Subgroup::full}, std::pair{Lattice::D4, Subgroup::full}}) {
    const auto group = lattice_automorphism_group(lattice, sub);
    Matrix form = Matrix::identity(group.rank);
    if (lattice == Lattice::A2) {
      form(0, 0) = 2, form(1, 1) = 2, form(0, 1) = -1, form(1, 0) = -1;
    }
    for (const auto& g : group.elements) CHECK(g.transpose() * form * g == form);
  }
}

TEST_CASE("graded monomial spaces count colored partitions") {
  for (std::size_t rank : {1u, 2u, 4u})
    for (int degree = 0; degree <= 6; ++degree) {
      CHECK(graded_dimension(rank, degree) == colored_partitions(rank, degree));
      CHECK(static_cast<long>(graded_monomial_space(rank, degree).size()) == colored_partitions(rank, degree));
    }
}

TEST_CASE("Molien series agrees with averaged traces and Reynolds ranks") {
  for (auto sub : {Subgroup::full, Subgroup::W, Subgroup::minus_tau, Subgroup::trivial}) {
    const auto group = lattice_automorphism_group(Lattice::A2, sub);
    const auto molien = molien_invariant_dimensions(group, 5);
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(Rational(molien[static_cast<std::size_t>(n)]) == averaged_trace(group, n));
      CHECK(static_cast<long>(reynolds_rank(group, n)) == molien[static_cast<std::size_t>(n)]);
    }
  }
  for (auto sub : {Subgroup::E, Subgroup::H}) {
    const auto group = lattice_automorphism_group(Lattice::D4, sub);
    const auto molien = molien_invariant_dimensions(group, 4);
    for (int n = 0; n <= 4; ++n) {
      CHECK(Rational(molien[static_cast<std::size_t>(n)]) == averaged_trace(group, n));
      CHECK(static_cast<long>(reynolds_rank(group, n)) == molien[static_cast<std::size_t>(n)]);
    }
  }
  CHECK(molien_invariant_dimensions(lattice_automorphism_group(Lattice::D4, Subgroup::full), 5) ==
        std::vector<long>{1, 0, 1, 1, 3, 3});
  CHECK(molien_invariant_dimensions(lattice_automorphism_group(Lattice::D4, Subgroup::W), 5) ==
        std::vector<long>{1, 0, 1, 1, 5, 5});
}

TEST_CASE("A2 weight-three automorphism invariant") {
  const auto space = graded_monomial_space(2, 3);
  Polynomial p;
  p[{{2, 0}, {1, 0}}] = 1;
  p[{{2, 1}, {1, 1}}] = 1;
  p[{{2, 0}, {1, 1}}] = fraction(1, 2);
  p[{{2, 1}, {1, 0}}] = fraction(1, 2);
  const auto full = invariant_basis(lattice_automorphism_group(Lattice::A2, Subgroup::full), 3);
  CHECK(same_span(full, {coordinates(space, p)}));
  const auto minus_tau = invariant_basis(lattice_automorphism_group(Lattice::A2, Subgroup::minus_tau), 3);
  Polynomial diagonal, off;
  diagonal[{{2, 0}, {1, 0}}] = 1;
  diagonal[{{2, 1}, {1, 1}}] = 1;
  off[{{2, 0}, {1, 1}}] = 1;
  off[{{2, 1}, {1, 0}}] = 1;
  CHECK(same_span(minus_tau, {coordinates(space, diagonal), coordinates(space, off)}));
  Polynomial foreign;
  foreign[{{3, 0}}] = 1;
  CHECK_THROWS_AS(coordinates(graded_monomial_space(2, 2), foreign), Error);
}

TEST_CASE("the D4 complement subspace") {
  const auto report = d4_X_subspace_check();
  CHECK(report.passed());
  CHECK(report.x_dimension == 2);
  CHECK(report.w_invariants_degree4 == 5);
  CHECK(report.aut_invariants_degree4 == 3);
  CHECK(report.vomega_degree5 == 2);
  CHECK(report.reference_degree5 == 4);
}
