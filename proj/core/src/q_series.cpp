#include "s4/q_series.hpp"

#include <algorithm>

namespace s4 {

PuiseuxSeries::PuiseuxSeries(Rational order) : order_(std::move(order)) {}

PuiseuxSeries PuiseuxSeries::one(const Rational& order) { return monomial(1, 0, order); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coeff, const Rational& exponent, const Rational& order) {
  PuiseuxSeries s(order);
  if (exponent < order && coeff != 0) s.terms_[exponent] = coeff;
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(const std::map<Rational, Rational>& terms, const Rational& order) {
  PuiseuxSeries s(order);
  for (const auto& [e, c] : terms)
    if (e < order && c != 0) s.terms_[e] = c;
  return s;
}

void PuiseuxSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first >= order_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::optional<Rational> PuiseuxSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
  if (exponent >= order_)
    throw Error("coefficient of q^" + s4::to_string(exponent) + " lies beyond truncation order " +
                s4::to_string(order_));
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool PuiseuxSeries::has_integer_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.first); });
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s(std::min(a.order_, b.order_));
  for (const auto& [e, c] : a.terms_)
    if (e < s.order_) s.terms_[e] += c;
  for (const auto& [e, c] : b.terms_)
    if (e < s.order_) s.terms_[e] += c;
  s.prune();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const Rational va = a.valuation().value_or(a.order_);
  const Rational vb = b.valuation().value_or(b.order_);
  PuiseuxSeries s(std::min(a.order_ + vb, b.order_ + va));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rational e = ea + eb;
      if (e >= s.order_) break;
      s.terms_[e] += ca * cb;
    }
  s.prune();
  return s;
}

PuiseuxSeries operator*(const Rational& scalar, const PuiseuxSeries& a) {
  PuiseuxSeries s = a;
  for (auto& [e, c] : s.terms_) c *= scalar;
  s.prune();
  return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
  if (terms_.empty()) throw Error("cannot invert a series with no known nonzero term");
  const Rational v = terms_.begin()->first;
  const Rational lead = terms_.begin()->second;
  const Rational precision = order_ - v;
  // this = lead q^v (1 + u) with u supported on positive exponents.
  PuiseuxSeries u(precision);
  for (const auto& [e, c] : terms_)
    if (e != v) u.terms_[e - v] = c / lead;
  PuiseuxSeries minus_u = -u;
  PuiseuxSeries sum = one(precision);
  PuiseuxSeries power = one(precision);
  while (true) {
    power = (power * minus_u).truncated(precision);
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return (1 / lead * sum).shifted(-v);
}

PuiseuxSeries PuiseuxSeries::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return one(order_ - valuation().value_or(0));
  PuiseuxSeries result(order_);
  PuiseuxSeries base = *this;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries PuiseuxSeries::substitute(const Rational& r) const {
  if (r <= 0) throw Error("substitution q -> q^r needs r > 0");
  PuiseuxSeries s(order_ * r);
  for (const auto& [e, c] : terms_) s.terms_[e * r] = c;
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& shift) const {
  PuiseuxSeries s(order_ + shift);
  for (const auto& [e, c] : terms_) s.terms_[e + shift] = c;
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  PuiseuxSeries s(std::min(order, order_));
  for (const auto& [e, c] : terms_)
    if (e < s.order_) s.terms_[e] = c;
  return s;
}

namespace {

std::string power_of_q(const Rational& e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  if (is_integer(e) && e > 0) return "q^" + s4::to_string(e);
  return "q^(" + s4::to_string(e) + ")";
}

}  // namespace

std::string PuiseuxSeries::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    std::string sign = c < 0 ? "-" : "+";
    if (out.empty())
      out = c < 0 ? "-" : "";
    else
      out += " " + sign + " ";
    std::string q = power_of_q(e);
    if (mag != 1 || q.empty()) out += s4::to_string(mag);
    out += q;
  }
  if (!out.empty()) out += " + ";
  return out + "O(" + (order_ == 1 ? std::string("q") : "q^" + (is_integer(order_) && order_ > 0
                                                                   ? s4::to_string(order_)
                                                                   : "(" + s4::to_string(order_) + ")")) +
         ")";
}

PuiseuxSeries euler_function(const Rational& order) {
  PuiseuxSeries s = PuiseuxSeries::one(order);
  for (long i = 1; i < order; ++i) s = s * (PuiseuxSeries::one(order) - PuiseuxSeries::monomial(1, i, order));
  return s;
}

PuiseuxSeries eta(const Rational& r, const Rational& order) {
  const Rational lead = r / 24;
  return euler_function((order - lead) / r).substitute(r).shifted(lead);
}

PuiseuxSeries restricted_product(long modulus, const std::set<long>& excluded_residues, const Rational& scale,
                                 const Rational& order) {
  if (modulus <= 0) throw Error("restricted_product needs a positive modulus");
  if (scale <= 0) throw Error("restricted_product needs a positive exponent scale");
  for (long r : excluded_residues)
    if (r < 0 || r >= modulus) throw Error("excluded residues must be reduced modulo the modulus");
  PuiseuxSeries s = PuiseuxSeries::one(order);
  for (long i = 1; scale * i < order; ++i) {
    if (excluded_residues.count(i % modulus)) continue;
    s = s * (PuiseuxSeries::one(order) - PuiseuxSeries::monomial(1, scale * i, order));
  }
  return s;
}

StringClass parse_string_class(std::string_view text) {
  if (text == "even") return StringClass::even;
  if (text == "short") return StringClass::short_root;
  throw Error("unknown string class '" + std::string(text) + "' (expected even or short)");
}

std::string to_string(StringClass cls) { return cls == StringClass::even ? "even" : "short"; }

namespace {

// eta(q)^{-k} eta(q^r)^m q^{lead} prod(...) with exponents measured from the leading term.
PuiseuxSeries eta_quotient_body(long eta_power, const Rational& r, long eta_r_power, long modulus,
                                std::set<long> excluded, const Rational& scale, const Rational& precision) {
  PuiseuxSeries body = euler_function(precision).pow(eta_power);
  if (eta_r_power != 0) body = body * euler_function(precision / r).substitute(r).pow(eta_r_power);
  return body * restricted_product(modulus, excluded, scale, precision);
}

bool simply_laced(Family f) { return f == Family::A || f == Family::D || f == Family::E; }

}  // namespace

PuiseuxSeries string_function(const CartanType& type, StringClass cls, int order) {
  if (order < 1) throw Error("string function order must be positive");
  const Rational R = order;
  switch (type.family()) {
    case Family::G: {
      // eta^{-3} q^{27/40} prod_{i != +-2 (5)} (1 - q^{3i})
      PuiseuxSeries shrt = eta_quotient_body(-3, 1, 0, 5, {2, 3}, 3, R).shifted(fraction(27, 40) - fraction(3, 24));
      if (cls == StringClass::short_root) return shrt;
      PuiseuxSeries extra =
          eta_quotient_body(-3, 1, 0, 5, {1, 4}, fraction(1, 3), R).shifted(fraction(1, 120) - fraction(3, 24));
      return shrt + extra;
    }
    case Family::F: {
      // eta^{-6} eta(q^2) q^{9/20} prod_{i != +-2 (5)} (1 - q^{2i})
      PuiseuxSeries shrt = eta_quotient_body(-6, 2, 1, 5, {2, 3}, 2, R)
                               .shifted(fraction(9, 20) - fraction(6, 24) + fraction(2, 24));
      if (cls == StringClass::short_root) return shrt;
      PuiseuxSeries extra = eta_quotient_body(-6, fraction(1, 2), 1, 5, {1, 4}, fraction(1, 2), R)
                                .shifted(fraction(1, 80) - fraction(6, 24) + fraction(1, 48));
      return shrt + extra;
    }
    default:
      break;
  }
  if (simply_laced(type.family()) && cls == StringClass::even)
    return euler_function(R).pow(-type.rank()).shifted(fraction(-type.rank(), 24));
  throw Error("no string function for " + type.label() + " in the " + to_string(cls) + " class");
}

namespace {

StringClass classify_norm(const CartanType& type, const Rational& norm) {
  const Rational r = mod(norm, 2);
  if (r == 0) return StringClass::even;
  if (type.family() == Family::G && r == fraction(2, 3)) return StringClass::short_root;
  if (type.family() == Family::F && r == 1) return StringClass::short_root;
  throw Error("|rho - w rho|^2 = " + s4::to_string(norm) + " falls in no string-function class for " + type.label());
}

}  // namespace

std::map<StringClass, PuiseuxSeries> weyl_numerators(const RootSystem& rs, int order) {
  const Family f = rs.type.family();
  if (f == Family::B || f == Family::C)
    throw Error("fixed-point series is not available for " + rs.type.label());
  std::map<StringClass, std::map<Rational, Rational>> sums;
  for (const auto& w : enumerate_weyl_ball(rs, Rational(2 * order))) {
    Rational norm = rho_displacement(rs, w);
    sums[classify_norm(rs.type, norm)][norm / 2] += w.sign();
  }
  std::map<StringClass, PuiseuxSeries> out;
  out.emplace(StringClass::even, PuiseuxSeries::from_terms(sums[StringClass::even], order));
  if (f == Family::G || f == Family::F)
    out.emplace(StringClass::short_root, PuiseuxSeries::from_terms(sums[StringClass::short_root], order));
  return out;
}

PuiseuxSeries fixed_point_graded_dimension(const CartanType& type, int order) {
  if (order < 1) throw Error("fixed-point order must be positive");
  const RootSystem rs = build_root_system(type);
  const int h = rs.dual_coxeter;
  const Rational s = -rs.norm2(rs.rho) / (2 * (1 + h) * h);
  PuiseuxSeries total(order);
  for (const auto& [cls, numerator] : weyl_numerators(rs, order))
    total = total + (numerator * string_function(type, cls, order)).shifted(-s);
  total = total.truncated(order);
  if (total.order() != order)
    throw Error("fixed-point series for " + type.label() + " lost precision (order " + s4::to_string(total.order()) +
                ")");
  for (const auto& [e, c] : total.terms())
    if (!is_integer(e) || e < 0)
      throw Error("fixed-point series for " + type.label() + " has exponent " + s4::to_string(e) +
                  "; the normalization of s or of the string functions is inconsistent");
  if (total.coefficient(0) != 1)
    throw Error("fixed-point series for " + type.label() + " has constant term " + s4::to_string(total.coefficient(0)));
  return total;
}

PuiseuxSeries vomega_series(int order) {
  PuiseuxSeries p = PuiseuxSeries::one(order);
  for (long i = 2; i < order; ++i) p = p * (PuiseuxSeries::one(order) - PuiseuxSeries::monomial(1, i, order));
  return p.inverse();
}

PuiseuxSeries reference_series(const CartanType& type) {
  const std::string label = type.label();
  if (label == "A1") return vomega_series();
  std::vector<long> coeffs;
  if (label == "A2") coeffs = {1, 0, 1, 2, 3, 4, 8};
  else if (label == "D4") coeffs = {1, 0, 1, 1, 4, 4, 9};
  else if (label == "E6") coeffs = {1, 0, 1, 1, 2, 3, 6};
  else if (label == "E7") coeffs = {1, 0, 1, 1, 2, 2, 5};
  else if (label == "E8") coeffs = {1, 0, 1, 1, 2, 2, 4};
  else throw Error("no published fixed-point series for " + label);
  std::map<Rational, Rational> terms;
  for (std::size_t n = 0; n < coeffs.size(); ++n) terms[Rational(static_cast<long>(n))] = coeffs[n];
  return PuiseuxSeries::from_terms(terms, static_cast<long>(coeffs.size()));
}

PuiseuxSeries extended_reference_series(const CartanType& type, int order) {
  const PuiseuxSeries printed = reference_series(type);
  const PuiseuxSeries computed = fixed_point_graded_dimension(type, order);
  const Rational common = std::min(printed.order(), computed.order());
  if (computed.truncated(common) != printed.truncated(common))
    throw Error("Weyl-sum series for " + type.label() + " disagrees with the published terms: " +
                computed.to_string() + " vs " + printed.to_string());
  return computed;
}

ClassDegree class_sn_degree(const PuiseuxSeries& series) {
  if (!series.has_integer_exponents()) throw Error("class degree needs integer exponents");
  if (series.order() < 3) throw Error("series truncated at " + to_string(series.order()) +
                                      " is too short to certify class S^2");
  Integer top = floor(series.order());
  if (top == series.order()) top -= 1;
  const int known = static_cast<int>(top.get_si());
  const PuiseuxSeries v = vomega_series(known + 1);
  for (int n = 0; n <= known; ++n)
    if (series.coefficient(n) != v.coefficient(n)) return {n - 1, true};
  return {known, false};
}

nlohmann::json to_json(const PuiseuxSeries& series) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : series.terms()) terms.push_back({to_string(e), to_string(c)});
  return {{"order", to_string(series.order())}, {"terms", terms}, {"text", series.to_string()}};
}

}  // namespace s4
