#include "glik/families.hpp"

#include <vector>

#include "glik/errors.hpp"
#include "glik/likelihood.hpp"

namespace glik {

Rational star_formula(int t) {
  if (t < 1) throw InvalidParameter("star formula needs t >= 1");
  BigInt sum = 0;
  for (int i = 0; i < t; ++i) sum += factorial(i);
  const BigInt tf = factorial(t);
  return make_rational(BigInt(t) * sum, tf * tf);
}

namespace {

// (1/t!) * sum over 2 <= i_1 < ... < i_s <= t of prod_j (i_j + 1 - 2j)/(i_j - 1),
// summed by dynamic programming over (j, i_j).
Rational matching_formula(int t, int s) {
  // ending[i]: sum over sequences of the current length whose last level is i.
  std::vector<Rational> ending(t + 1, Rational(0));
  if (s == 0) return make_rational(1, factorial(t));
  for (int i = 2; i <= t; ++i) ending[i] = make_rational(i - 1, i - 1); // j = 1
  for (int j = 2; j <= s; ++j) {
    std::vector<Rational> next(t + 1, Rational(0));
    Rational below = 0;
    for (int i = 2; i <= t; ++i) {
      next[i] = below * make_rational(i + 1 - 2 * j, i - 1);
      below += ending[i];
    }
    ending = std::move(next);
  }
  Rational total = 0;
  for (int i = 2; i <= t; ++i) total += ending[i];
  return total / factorial(t);
}

} // namespace

Rational family_closed_form(const FamilySpec& spec) {
  validate(spec);
  const int t = spec.order;
  switch (spec.kind) {
  case Family::complete:
  case Family::empty:
    return make_rational(1, factorial(t));
  case Family::star:
    return t == 2 ? make_rational(1, factorial(2)) : star_formula(t);
  case Family::one_edge:
    return make_rational(t - 1, factorial(t));
  case Family::matching:
    return matching_formula(t, spec.size);
  case Family::path:
    throw NoClosedForm("no closed form for paths");
  case Family::cycle:
    throw NoClosedForm("cycles go through cycle_from_path_relation");
  }
  throw NoClosedForm("unknown family");
}

Rational cycle_from_path_relation(int n, const Limits& limits) {
  if (n < 3) throw InvalidParameter("cycle relation requires n >= 3");
  const Rational path = likelihood_exact(make_family({Family::path, n - 1, 0}), limits);
  return path / (BigInt(n) * binomial(n - 1, 2));
}

} // namespace glik
