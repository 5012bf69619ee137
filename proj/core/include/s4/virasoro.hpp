#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/linalg.hpp"
#include "s4/rational.hpp"

namespace s4 {

/// Parts n_1 >= ... >= n_k of L(-n_1)...L(-n_k) applied to the highest-weight vector.
using VirasoroMonomial = std::vector<int>;

/// A homogeneous vector in the Virasoro vacuum module.
struct VirasoroState {
  std::map<VirasoroMonomial, Rational> combination;
  int degree = 0;
  Rational central_charge;

  bool is_zero() const { return combination.empty(); }
  Rational coefficient(const VirasoroMonomial& m) const;
  std::string to_string() const;

  VirasoroState& operator+=(const VirasoroState& other);
  VirasoroState& operator-=(const VirasoroState& other);
  VirasoroState& operator*=(const Rational& s);
  friend VirasoroState operator+(VirasoroState a, const VirasoroState& b) { return a += b; }
  friend VirasoroState operator-(VirasoroState a, const VirasoroState& b) { return a -= b; }
  friend VirasoroState operator*(const Rational& s, VirasoroState a) { return a *= s; }
  friend bool operator==(const VirasoroState& a, const VirasoroState& b);
};

inline constexpr int kVirasoroDegreeCap = 8;

VirasoroState vacuum_state(const Rational& c);
/// L(-n_1)...L(-n_k) 1; parts are sorted, and a part below 2 gives the zero state.
VirasoroState vacuum_monomial(const Rational& c, VirasoroMonomial parts);

/// Monomials over partitions of the degree into parts >= 2, in reverse lexicographic order.
std::vector<VirasoroMonomial> vacuum_monomials(int degree);
std::vector<VirasoroState> vacuum_basis(int degree, const Rational& c);

VirasoroState apply_L(int m, const VirasoroState& state);

/// Translation T = L(-1).
inline VirasoroState translate(const VirasoroState& state) { return apply_L(-1, state); }

/// Contravariant form with L(n)^t = L(-n) and vacuum norm 1.
Rational vacuum_pairing(const VirasoroState& a, const VirasoroState& b);
Matrix gram_matrix(int degree, const Rational& c);

/// Coordinates in vacuum_monomials(state.degree).
Vector coordinates(const VirasoroState& state);

/// Gram determinant at the given degree as polynomial coefficients in c (constant term first).
std::vector<Rational> gram_determinant_polynomial(int degree);

struct GramRoots {
  int degree = 0;
  /// Roots with multiplicity, taken from degenerate_central_charges(k) for k <= degree.
  std::vector<std::pair<Rational, int>> roots;
  /// Degree of what is left after dividing out those roots; 0 when the two criteria agree.
  int residual_degree = 0;
  Rational leading_coefficient;
};

GramRoots gram_determinant_roots(int degree);

/// Solves L(m) x = (n - 1) kappa_{n-m} for m = 1..n with kappa_0 = d 1 and kappa_1 = 0.
/// Throws Error when the Gram matrix is singular at some degree <= n.
VirasoroState casimir_coefficients(const Rational& c, const Rational& d, int n);

/// The closed forms of kappa_0..kappa_4 in terms of c and d.
VirasoroState casimir_closed_form(const Rational& c, const Rational& d, int n);

struct CasimirReport {
  Rational c;
  Rational d;
  int n = 0;
  VirasoroState solved;
  VirasoroState closed_form;
  bool consistent = false;
  bool matches = false;
};

CasimirReport casimir_report(const Rational& c, const Rational& d, int n);

/// Tr of v_(3) over d weight-1 primaries, for v of degree 4.
Rational descendant_zero_mode_trace_on_primaries(const VirasoroState& state, const Rational& d);

nlohmann::json to_json(const VirasoroState& state);
nlohmann::json to_json(const CasimirReport& report);
nlohmann::json to_json(const GramRoots& roots);

}  // namespace s4
