// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "glik/canonical.hpp"
#include "glik/families.hpp"
#include "glik/likelihood.hpp"
#include "glik/monkey.hpp"
#include "glik/rational.hpp"
#include "glik/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace glik;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Rational> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* s : texts) out.push_back(parse_rational(s));
  return out;
}

Outcome reference_values() {
  Outcome o;
  const std::map<int, std::vector<Rational>> expected = {
      {1, parse_all({"1"})},
      {2, parse_all({"1/2", "1/2"})},
      {3, parse_all({"1/6", "1/3", "1/3", "1/6"})},
      {4, parse_all({"1/24", "1/8", "1/36", "13/72", "1/9", "1/36", "5/72", "5/72", "13/72",
                     "1/8", "1/24"})},
  };
  for (const auto& [t, values] : expected) {
    std::vector<Rational> got;
    for (const Graph& g : enumerate_nonisomorphic(t)) got.push_back(likelihood_exact(g));
    if (sorted(got) != sorted(values)) o.fail("value multiset differs at t=" + std::to_string(t));
  }
  for (const ReferenceValue& ref : figure1_table()) {
    if (likelihood_exact(ref.graph) != ref.likelihood) o.fail(ref.name + " differs");
  }
  return o;
}

Outcome normalization() {
  Outcome o;
  for (int t = 1; t <= 6; ++t) {
    Rational sum = 0;
    for (const CensusEntry& e : likelihood_census(t)) sum += e.likelihood;
    if (sum != 1) o.fail("sum is " + to_string(sum) + " at t=" + std::to_string(t));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int t = 1; t <= 5; ++t) {
    std::map<CanonicalKey, Rational> census;
    for (const CensusEntry& e : likelihood_census(t)) census[e.key] = e.likelihood;
    const auto oracle = process_distribution_oracle(t);
    if (oracle.size() != census.size()) o.fail("class count differs at t=" + std::to_string(t));
    for (const ClassProbability& c : oracle) {
      const auto it = census.find(c.key);
      if (it == census.end() || it->second != c.probability) o.fail("mismatch at " + c.key.graph6());
    }
  }
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  for (int t = 1; t <= 7; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      const Rational dp = likelihood_exact(g);
      const Rational orderings = likelihood_by_orderings(g);
      const Rational paths = likelihood_from_paths(enumerate_path_constructions(g));
      if (dp != orderings || dp != paths) o.fail("disagreement at " + to_graph6(g));
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (int t = 2; t <= 9; ++t) {
    const Rational complete = likelihood_exact(make_family({Family::complete, t, 0}));
    if (complete != 1 / Rational(factorial(t))) o.fail("complete at t=" + std::to_string(t));
    // Literal expression t/(t!)^2 * sum i!, not the corrected family value.
    const Rational star = likelihood_exact(make_family({Family::star, t, 0}));
    if (star != star_formula(t)) {
      o.fail("star formula gives " + to_string(star_formula(t)) + ", DP gives " + to_string(star) +
             " at t=" + std::to_string(t));
    }
    const FamilySpec edge{Family::one_edge, t, 0};
    if (likelihood_exact(make_family(edge)) != Rational(t - 1) / Rational(factorial(t))) {
      o.fail("one edge at t=" + std::to_string(t));
    }
    for (int s = 1; s <= 3 && 2 * s <= t; ++s) {
      const FamilySpec m{Family::matching, t, s};
      if (likelihood_exact(make_family(m)) != family_closed_form(m)) {
        o.fail("matching t=" + std::to_string(t) + " s=" + std::to_string(s));
      }
    }
  }
  for (int n = 3; n <= 9; ++n) {
    if (likelihood_exact(make_family({Family::cycle, n, 0})) != cycle_from_path_relation(n)) {
      o.fail("cycle relation at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome complement_invariance() {
  Outcome o;
  for (int t = 1; t <= 6; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      const Rational l = likelihood_exact(g);
      if (l <= 0) o.fail("non-positive at " + to_graph6(g));
      if (l != likelihood_exact(complement(g))) o.fail("complement differs at " + to_graph6(g));
    }
  }
  return o;
}

Outcome bounds() {
  Outcome o;
  for (int t = 1; t <= 6; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      const BigInt aut = automorphism_count(g);
      BigInt product = 1;
      for (int i = 1; i <= t; ++i) product *= binomial(i - 1, (i - 1) / 2);
      const Rational lower(1, aut * product);
      const Rational upper(1, aut);
      const Rational l = likelihood_exact(g);
      if (l < lower || l > upper) {
        o.fail("bound violated at " + to_graph6(g));
      }
    }
  }
  return o;
}

Outcome path_counting() {
  Outcome o;
  for (int t = 1; t <= 7; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      const BigInt count = enumerate_path_constructions(g).size();
      if (count * automorphism_count(g) != factorial(t)) o.fail("|Path|*|Aut| at " + to_graph6(g));
    }
  }
  for (int t = 1; t <= 6; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      if (automorphism_count(g) != BigInt(std::to_string(testing::brute_force_automorphisms(g)))) {
        o.fail("|Aut| differs from brute force at " + to_graph6(g));
      }
    }
  }
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  constexpr std::uint64_t kSamples = 1000000;
  constexpr std::uint64_t kSeed = 0x5EED;
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  for (int t = 1; t <= 4; ++t) {
    const auto counts = sample_distribution(t, kSamples, kSeed + t, threads);
    if (counts != sample_distribution(t, kSamples, kSeed + t, threads)) {
      o.fail("rerun differs at t=" + std::to_string(t));
    }
    for (const CensusEntry& e : likelihood_census(t)) {
      const auto it = counts.find(e.key);
      const Estimate est = make_estimate(it == counts.end() ? 0 : it->second, kSamples);
      if (std::abs(est.p_hat - e.likelihood.get_d()) > 4 * est.std_error) {
        o.fail("outside 4 stderr at " + e.key.graph6());
      }
    }
  }
  return o;
}

Outcome constructibility() {
  Outcome o;
  for (int t = 1; t <= 7; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      if (likelihood_exact(g) <= 0) o.fail("non-positive at " + to_graph6(g));
      if (enumerate_path_constructions(g).empty()) o.fail("no path construction for " + to_graph6(g));
    }
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> check;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "reference values for all classes t <= 4", 1.0, reference_values},
      {"C2", "census sums to 1 for t <= 6", 120.0, normalization},
      {"C3", "process oracle equals census for t <= 5", 0, oracle_equivalence},
      {"C4", "DP = orderings = paths for t <= 7", 600.0, triple_agreement},
      {"C5", "closed forms and cycle relation", 0, closed_forms},
      {"C6", "complement invariance and positivity for t <= 6", 0, complement_invariance},
      {"C7", "automorphism bounds for t <= 6", 0, bounds},
      {"C8", "|Path|*|Aut| = t! and brute-force |Aut|", 0, path_counting},
      {"C9", "Monte Carlo within 4 stderr for t <= 4", 300.0, monte_carlo},
      {"C10", "positivity and nonempty path enumeration for t <= 7", 0, constructibility},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      o.fail("took " + std::to_string(elapsed) + " s, budget " + std::to_string(c.budget_seconds));
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %-4s %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, elapsed,
                o.passed ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
