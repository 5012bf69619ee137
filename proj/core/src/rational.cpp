#include "s4/rational.hpp"

#include <charconv>

namespace s4 {

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational mod(const Rational& value, const Rational& modulus) {
  if (modulus <= 0) throw Error("mod: modulus must be positive");
  Rational quotient = value / modulus;
  Rational result = value - Rational(floor(quotient)) * modulus;
  result.canonicalize();
  return result;
}

Integer binomial(long top, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::vector<std::string> to_strings(const Vector& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace s4
