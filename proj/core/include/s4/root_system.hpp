#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/linalg.hpp"
#include "s4/rational.hpp"

namespace s4 {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type such as A2, F4 or E8, validated on construction.
class CartanType {
 public:
  CartanType(Family family, int rank);

  /// Parses labels like "A1", "g2", "E8". Throws Error for unsupported type/rank.
  static CartanType parse(std::string_view label);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// dim g from the closed formula for this type.
  int dimension() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  int rank_;
};

using IntVector = std::vector<int>;

/// A finite root system in simple-root coordinates (Bourbaki labeling),
/// normalized so that long roots have squared length 2.
struct RootSystem {
  CartanType type;
  int rank = 0;
  Matrix gram{};                          // (alpha_i, alpha_j)
  std::vector<std::vector<int>> cartan{};  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<IntVector> positive_roots{}; // ordered by height, then lexicographically
  Vector rho{};                           // half the sum of positive roots
  IntVector highest_root{};
  int dual_coxeter = 0;

  Rational inner(const IntVector& a, const IntVector& b) const;
  Rational inner(const Vector& a, const Vector& b) const;
  Rational norm2(const IntVector& a) const { return inner(a, a); }
  Rational norm2(const Vector& a) const { return inner(a, a); }

  /// <beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i).
  int coroot_pairing(const IntVector& beta, int i) const;

  /// Index into positive_roots, or nullopt.
  std::optional<std::size_t> positive_index(const IntVector& beta) const;
  bool is_root(const IntVector& beta) const;

  std::size_t dimension() const { return static_cast<std::size_t>(rank) + 2 * positive_roots.size(); }

  std::map<IntVector, std::size_t> index_of_positive{};
};

/// Throws Error for unsupported labels.
RootSystem build_root_system(const CartanType& type);
RootSystem build_root_system(std::string_view label);

/// h^vee = (rho, theta^vee) + 1.
int dual_coxeter_number(const RootSystem& rs);

int height(const IntVector& root);

/// Weyl group element acting on simple-root coordinates (row-major rank x rank).
struct WeylElement {
  std::vector<std::int32_t> matrix;
  int length = 0;
  int sign() const { return length % 2 == 0 ? 1 : -1; }
};

/// Left action of w on a coordinate vector.
Vector apply(const WeylElement& w, int rank, const Vector& v);
IntVector apply(const WeylElement& w, int rank, const IntVector& v);

/// Simple reflection s_i as a matrix on simple-root coordinates.
std::vector<std::int32_t> simple_reflection(const RootSystem& rs, int i);

inline constexpr std::size_t kDefaultWeylCap = 100000;

/// Breadth-first enumeration by left multiplication with simple reflections.
/// Throws Error naming the cap if |W| exceeds it.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

/// Weyl group order from the product of (degree) formula, for cross-checks.
std::uint64_t weyl_group_order(const CartanType& type);

/// |rho - w(rho)|^2.
Rational rho_displacement(const RootSystem& rs, const WeylElement& w);

/// All w with |rho - w(rho)|^2 <= bound, found by breadth-first search that only
/// extends elements inside the bound. Sound because the displacement strictly
/// increases along reduced words (see check_rho_monotonicity).
std::vector<WeylElement> enumerate_weyl_ball(const RootSystem& rs, const Rational& bound,
                                             std::size_t cap = 5'000'000);

struct CensusCell {
  Rational norm;  // |rho - w(rho)|^2
  int sign = 1;   // epsilon(w)
  std::size_t count = 0;
};

/// Census over the fully enumerated Weyl group; cells sorted by norm, then sign (+ first).
/// A missing bound means no filtering.
std::vector<CensusCell> rho_displacement_census(const RootSystem& rs, std::optional<Rational> bound);

struct MonotonicityReport {
  bool passed = true;
  std::size_t elements_checked = 0;
  std::size_t inverse_checks = 0;
  std::size_t reflection_checks = 0;
  std::optional<std::string> counterexample;
};

/// Checks |rho - w rho| = |rho - w^{-1} rho| and strict growth along l(rw) > l(w).
MonotonicityReport check_rho_monotonicity(const RootSystem& rs);

/// Columns are the D4 simple roots e1-e2, e2-e3, e3-e4, e3+e4 in the orthonormal basis.
Matrix d4_simple_roots_in_standard_basis();
/// Inverse change of basis: standard coordinates -> simple-root coordinates.
Matrix d4_standard_to_simple_roots();

nlohmann::json to_json(const RootSystem& rs);
nlohmann::json to_json(const std::vector<CensusCell>& census);

}  // namespace s4
