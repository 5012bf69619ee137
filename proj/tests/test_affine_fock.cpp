#include <doctest.h>

#include "generators.hpp"
#include "s4/affine_fock.hpp"
#include "s4/lattice_invariants.hpp"

using namespace s4;

namespace {

const LieAlgebra& algebra(const char* label) {
  static std::map<std::string, LieAlgebra> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, build_chevalley(build_root_system(label))).first;
  return it->second;
}

Vector random_x(const AffineFock& fock, std::mt19937_64& rng) {
  return random_small_vector(rng, fock.algebra().dim());
}

}  // namespace

TEST_CASE("PBW basis sizes match the graded dimension") {
  AffineFock a1(algebra("A1"));
  for (int n = 0; n <= 4; ++n) CHECK(static_cast<long>(a1.pbw_basis(n).size()) == graded_dimension(3, n));
  CHECK(a1.pbw_basis(4).size() == 51);
  AffineFock a2(algebra("A2"));
  for (int n = 0; n <= 2; ++n) CHECK(static_cast<long>(a2.pbw_basis(n).size()) == graded_dimension(8, n));
}

TEST_CASE("degree-one Gram matrix is the normalized form") {
  for (const char* label : {"A1", "A2", "G2"}) {
    AffineFock fock(algebra(label));
    CHECK(fock.gram(1) == fock.algebra().form_matrix());
    CHECK(fock.pairing(fock.vacuum(), fock.vacuum()) == kVacuumNorm);
  }
}

TEST_CASE("affine commutator relation on random states") {
  auto rng = testing::make_rng(50);
  AffineFock fock(algebra("A2"));
  const auto& g = fock.algebra();
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = random_x(fock, rng), y = random_x(fock, rng);
    const int m = static_cast<int>(testing::small_int(rng, -2, 2));
    const int n = static_cast<int>(testing::small_int(rng, -2, 2));
    const auto s = random_fock_state(fock, rng, static_cast<int>(testing::small_int(rng, 0, 2)));
    FockState lhs = fock.apply_mode(x, m, fock.apply_mode(y, n, s)) - fock.apply_mode(y, n, fock.apply_mode(x, m, s));
    FockState rhs = fock.apply_mode(g.bracket(x, y), m + n, s);
    if (m + n == 0) rhs += (m * g.form(x, y)) * s;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Sugawara construction agrees with the primary rule") {
  auto rng = testing::make_rng(51);
  for (const char* label : {"A1", "A2"}) {
    AffineFock fock(algebra(label));
    for (int trial = 0; trial < 6; ++trial) {
      const auto s = random_fock_state(fock, rng, static_cast<int>(testing::small_int(rng, 0, 2)));
      for (int m = -1; m <= 3; ++m) CHECK(fock.sugawara_L(m, s) == fock.apply_L(m, s));
    }
  }
}

TEST_CASE("Sugawara modes satisfy the Virasoro relation with c = dim/(1 + h)") {
  auto rng = testing::make_rng(52);
  AffineFock fock(algebra("A1"));
  const Rational c = fock.central_charge();
  CHECK(c == 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_fock_state(fock, rng, 2);
    const int m = static_cast<int>(testing::small_int(rng, -2, 2));
    const int n = static_cast<int>(testing::small_int(rng, -2, 2));
    auto lhs = fock.sugawara_L(m, fock.sugawara_L(n, s)) - fock.sugawara_L(n, fock.sugawara_L(m, s));
    auto rhs = Rational(m - n) * fock.sugawara_L(m + n, s);
    if (m + n == 0) rhs += (c / 12 * (m * m * m - m)) * s;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("primary rule for L(m) against weight-one modes") {
  auto rng = testing::make_rng(53);
  AffineFock fock(algebra("A2"));
  for (int trial = 0; trial < 6; ++trial) {
    const Vector a = random_x(fock, rng);
    const int m = static_cast<int>(testing::small_int(rng, -1, 2));
    const int n = static_cast<int>(testing::small_int(rng, -2, 1));
    const auto s = random_fock_state(fock, rng, 2);
    auto lhs = fock.apply_L(m, fock.apply_mode(a, n, s)) - fock.apply_mode(a, n, fock.apply_L(m, s));
    CHECK(lhs == Rational(-n) * fock.apply_mode(a, m + n, s));
  }
}

TEST_CASE("state modes of weight-one states are the affine modes") {
  auto rng = testing::make_rng(54);
  AffineFock fock(algebra("A1"));
  for (int trial = 0; trial < 6; ++trial) {
    const Vector x = random_x(fock, rng);
    const long n = testing::small_int(rng, -2, 2);
    const auto s = random_fock_state(fock, rng, 2);
    CHECK(fock.state_mode(fock.weight_one(x), n, s) == fock.apply_mode(x, static_cast<int>(n), s));
    CHECK(fock.state_mode(fock.vacuum(), -1, s) == s);
  }
}

TEST_CASE("Borcherds commutator formula for weight-one against composite states") {
  auto rng = testing::make_rng(55);
  AffineFock fock(algebra("A1"));
  for (int trial = 0; trial < 4; ++trial) {
    const Vector a = random_x(fock, rng);
    const auto v = random_fock_state(fock, rng, 2);
    const auto t = random_fock_state(fock, rng, 1);
    const int m = static_cast<int>(testing::small_int(rng, 0, 2));
    const long n = testing::small_int(rng, -1, 2);
    auto lhs = fock.apply_mode(a, m, fock.state_mode(v, n, t)) - fock.state_mode(v, n, fock.apply_mode(a, m, t));
    FockState rhs;
    for (int j = 0; j <= m; ++j)
      rhs += Rational(binomial(m, j)) * fock.state_mode(fock.apply_mode(a, j, v), m + n - j, t);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Casimir states are invariant, basis independent and lowered by L(m)") {
  auto rng = testing::make_rng(56);
  AffineFock fock(algebra("A1"));
  const std::size_t d = fock.algebra().dim();
  Matrix basis(d, d);
  do {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) basis(i, j) = testing::small_int(rng, -2, 2);
  } while (determinant(basis) == 0);
  for (int i = 0; i <= 4; ++i) CHECK(fock.casimir_state(i, basis) == fock.casimir_state(i));
  CHECK(fock.casimir_state(0) == Rational(static_cast<long>(d)) * fock.vacuum());
  CHECK(fock.casimir_state(1).is_zero());
  for (int i = 2; i <= 4; ++i) {
    const Vector x = random_x(fock, rng);
    CHECK(fock.apply_mode(x, 0, fock.casimir_state(i)).is_zero());
    for (int m = 1; m < i - 1; ++m)
      CHECK(fock.apply_L(m, fock.casimir_state(i)) == Rational(i - 1) * fock.casimir_state(i - m));
  }
}

TEST_CASE("Casimir identities and radical membership") {
  for (const char* label : {"A1", "A2"}) {
    AffineFock fock(algebra(label));
    const auto k = check_kappa_identities(fock);
    CHECK(k.passed());
  }
  AffineFock fock(algebra("A1"));
  const auto& g = fock.algebra();
  const Vector e = g.basis_vector(g.root_vector(0, false));
  const auto e2 = fock.apply_mode(e, -1, fock.weight_one(e));
  CHECK(radical_membership(fock, e2).in_radical);
  CHECK_FALSE(radical_membership(fock, fock.conformal_vector()).in_radical);
  CHECK(fock.pairing(fock.conformal_vector(), fock.conformal_vector()) == kVacuumNorm * fock.central_charge() / 2);
}

TEST_CASE("embedding of the Virasoro vacuum module") {
  AffineFock fock(algebra("A1"));
  const Rational c = fock.central_charge();
  CHECK(fock.from_virasoro(vacuum_monomial(c, {2})) == fock.conformal_vector());
  const auto v = vacuum_monomial(c, {2, 2});
  const auto w = vacuum_monomial(c, {4});
  CHECK(fock.pairing(fock.from_virasoro(v), fock.from_virasoro(w)) == kVacuumNorm * vacuum_pairing(v, w));
}

TEST_CASE("mode identity for weight-one states") {
  for (const char* label : {"A1", "A2"}) {
    AffineFock fock(algebra(label));
    const auto r = verify_lemma_A1(fock, 40);
    CHECK(r.passed);
    CHECK(r.samples == 40);
  }
}

TEST_CASE("projection onto the Virasoro span for (e, f, e, f)") {
  AffineFock fock(algebra("A1"));
  const auto& g = fock.algebra();
  const Vector e = g.basis_vector(g.root_vector(0, false));
  const Vector f = g.basis_vector(g.root_vector(0, true));
  const auto p = appendix_b_projection(fock, {e, f, e, f});
  CHECK(p.invariants.P == 2);
  CHECK(p.invariants.Q == -2);
  CHECK(p.invariants.S == 2);
  CHECK(p.Z1 == fraction(-2, 3));
  CHECK(p.Z2 == fraction(16, 9));
  CHECK(p.matches);
  const auto t = trace_decomposition_check(fock, {e, f, e, f});
  CHECK(t.ad_trace == 8);
  CHECK(t.passed());
}

TEST_CASE("trace decomposition on random quadruples") {
  for (const char* label : {"A1", "A2"}) {
    AffineFock fock(algebra(label));
    const auto r = verify_appendix_b(fock, 4);
    CHECK(r.passed());
  }
}
