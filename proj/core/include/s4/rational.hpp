#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace s4 {

/// Arbitrary-precision rational; the scalar type of every exact computation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Raised for contract violations: bad labels, excluded parameters, caps exceeded.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws Error when den is zero.
Rational fraction(const Integer& num, const Integer& den);

bool is_integer(const Rational& value);

/// Floor of a rational as an exact integer.
Integer floor(const Rational& value);

/// value mod modulus in [0, modulus), modulus > 0.
Rational mod(const Rational& value, const Rational& modulus);

/// Generalized binomial coefficient C(top, k) for any integer top and k >= 0.
Integer binomial(long top, long k);

Integer lcm(const Integer& a, const Integer& b);

std::vector<std::string> to_strings(const Vector& values);

}  // namespace s4
