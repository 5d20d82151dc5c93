#ifndef GLIK_RATIONAL_HPP
#define GLIK_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

namespace glik {

// GMP keeps mpq_class in lowest terms with a positive denominator after every
// arithmetic operation; values built by hand must go through make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

/// Decimal rendering rounded half-up to `digits` places after the point.
std::string to_decimal(const Rational& q, int digits);

BigInt factorial(int n);

/// C(n, k) for 0 <= k <= n < 64, from a table built once.
const BigInt& binomial(int n, int k);

} // namespace glik

#endif // GLIK_RATIONAL_HPP
