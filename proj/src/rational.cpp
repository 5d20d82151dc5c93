#include "glik/rational.hpp"

#include <array>
#include <vector>

#include "glik/errors.hpp"

namespace glik {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidParameter("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw MalformedInput("not a rational number: '" + text + "'", 0);
  }
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = q < 0;
  BigInt num = abs(q.get_num()) * scale * 2 + q.get_den();
  BigInt den = q.get_den() * 2;
  BigInt scaled = num / den; // floor(|q|·10^digits + 1/2)
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) {
      body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
    }
    body.insert(body.size() - digits, ".");
  }
  return (negative && scaled != 0 ? "-" : "") + body;
}

BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

namespace {

struct BinomialTable {
  std::vector<std::vector<BigInt>> rows;
  BinomialTable() : rows(64) {
    for (int n = 0; n < 64; ++n) {
      rows[n].resize(n + 1);
      rows[n][0] = rows[n][n] = 1;
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
};

} // namespace

const BigInt& binomial(int n, int k) {
  static const BinomialTable table;
  if (n < 0 || n >= 64 || k < 0 || k > n) {
    throw InvalidParameter("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") out of table range");
  }
  return table.rows[n][k];
}

} // namespace glik
