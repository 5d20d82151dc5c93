#ifndef GLIK_FAMILIES_HPP
#define GLIK_FAMILIES_HPP

#include "glik/graph.hpp"
#include "glik/limits.hpp"
#include "glik/rational.hpp"

namespace glik {

/// Closed-form likelihood of a graph family:
///   complete, empty      1/t!
///   star (t >= 3)        t/(t!)^2 * sum_{i=0}^{t-1} i!
///   one edge             (t-1)/t!
///   s-edge matching      1/t! * sum_{2<=i_1<...<i_s<=t} prod_j (i_j+1-2j)/(i_j-1)
/// The star expression does not hold at t = 2 (it evaluates to 1); K_{1,1} is
/// K_2 and gets the complete-graph value. Path and cycle throw NoClosedForm.
Rational family_closed_form(const FamilySpec& spec);

/// The star expression exactly as written, for any t >= 1.
Rational star_formula(int t);

/// L(C_n) = L(P_{n-1}) / (n * C(n-1, 2)), with L(P_{n-1}) from likelihood_exact.
Rational cycle_from_path_relation(int n, const Limits& limits = {});

} // namespace glik

#endif // GLIK_FAMILIES_HPP
