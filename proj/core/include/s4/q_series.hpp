#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "s4/rational.hpp"
#include "s4/root_system.hpp"

namespace s4 {

/// Truncated series in q with rational exponents. Exponents >= order() are unknown.
class PuiseuxSeries {
 public:
  explicit PuiseuxSeries(Rational order);

  static PuiseuxSeries one(const Rational& order);
  static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent, const Rational& order);
  /// Builds from (exponent, coefficient) pairs; terms at or beyond order are dropped.
  static PuiseuxSeries from_terms(const std::map<Rational, Rational>& terms, const Rational& order);

  const std::map<Rational, Rational>& terms() const { return terms_; }
  const Rational& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest stored exponent, or nullopt for the zero series.
  std::optional<Rational> valuation() const;
  /// Throws Error if the exponent lies beyond the truncation order.
  Rational coefficient(const Rational& exponent) const;
  bool has_integer_exponents() const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rational& s, const PuiseuxSeries& a);
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) = default;

  /// Throws Error for the zero series.
  PuiseuxSeries inverse() const;
  PuiseuxSeries pow(long n) const;
  /// q -> q^r for r > 0.
  PuiseuxSeries substitute(const Rational& r) const;
  /// q -> q^{1/m}: every exponent divided by m.
  PuiseuxSeries rescale_exponents(const Rational& m) const { return substitute(1 / m); }
  /// Multiplication by q^e.
  PuiseuxSeries shifted(const Rational& e) const;
  PuiseuxSeries truncated(const Rational& order) const;

  /// "1 + q^2 + 2q^3 + O(q^7)" style rendering.
  std::string to_string() const;

 private:
  std::map<Rational, Rational> terms_;
  Rational order_;
  void prune();
};

inline constexpr int kDefaultSeriesOrder = 9;

/// prod_{i >= 1} (1 - q^i) truncated at order.
PuiseuxSeries euler_function(const Rational& order);
/// eta(q^r) = q^{r/24} prod (1 - q^{ri}) truncated at order.
PuiseuxSeries eta(const Rational& r, const Rational& order);
/// prod over i >= 1 with (i mod modulus) not excluded of (1 - q^{scale i}).
PuiseuxSeries restricted_product(long modulus, const std::set<long>& excluded_residues, const Rational& scale,
                                 const Rational& order);

enum class StringClass { even, short_root };

StringClass parse_string_class(std::string_view text);
std::string to_string(StringClass cls);

/// Level-1 string function c^{Lambda_0}_{lambda} for the norm class of lambda.
/// G2 and F4 use the explicit eta-product formulas; simply-laced types use eta^{-rank}.
/// The result carries `order` terms beyond its leading exponent.
PuiseuxSeries string_function(const CartanType& type, StringClass cls, int order);

/// sum over the Weyl ball of eps(w) q^{|rho - w rho|^2 / 2}, one series per string class.
std::map<StringClass, PuiseuxSeries> weyl_numerators(const RootSystem& rs, int order);

/// q^{-s} sum_w eps(w) q^{|rho - w rho|^2/2} c_w with s = -|rho|^2 / (2(1+h)h).
/// Throws Error unless the result has non-negative integer exponents and constant term 1.
PuiseuxSeries fixed_point_graded_dimension(const CartanType& type, int order = kDefaultSeriesOrder);

/// 1 / prod_{i >= 2} (1 - q^i).
PuiseuxSeries vomega_series(int order = kDefaultSeriesOrder);

/// Published fixed-point series for A1, A2, D4, E6, E7, E8 (A1 is the Virasoro series).
PuiseuxSeries reference_series(const CartanType& type);

/// Longer version of a published series, computed through the simply-laced Weyl sum
/// after checking it against the printed terms.
PuiseuxSeries extended_reference_series(const CartanType& type, int order = kDefaultSeriesOrder);

struct ClassDegree {
  int degree = 0;
  /// False when agreement runs to the truncation order, so the degree is only a lower bound.
  bool certified = false;
};

/// Largest n with agreement against vomega_series through q^n.
/// Throws Error if the series has non-integer exponents or is truncated below q^3.
ClassDegree class_sn_degree(const PuiseuxSeries& series);

nlohmann::json to_json(const PuiseuxSeries& series);

}  // namespace s4
