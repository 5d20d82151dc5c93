#include "glik/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "glik/canonical.hpp"
#include "glik/errors.hpp"
#include "glik/families.hpp"
#include "glik/likelihood.hpp"
#include "glik/monkey.hpp"

namespace glik {

const std::vector<ReferenceValue>& figure1_table() {
  static const std::vector<ReferenceValue> table = [] {
    const auto q = [](int n, int d) { return make_rational(n, d); };
    return std::vector<ReferenceValue>{
        {"K1", Graph(1), q(1, 1)},
        {"2K1", Graph(2), q(1, 2)},
        {"K2", Graph(2, {{0, 1}}), q(1, 2)},
        {"3K1", Graph(3), q(1, 6)},
        {"K2+K1", Graph(3, {{0, 1}}), q(1, 3)},
        {"P3", Graph(3, {{0, 1}, {1, 2}}), q(1, 3)},
        {"K3", Graph(3, {{0, 1}, {0, 2}, {1, 2}}), q(1, 6)},
        {"4K1", Graph(4), q(1, 24)},
        {"K2+2K1", Graph(4, {{0, 1}}), q(1, 8)},
        {"2K2", Graph(4, {{0, 1}, {2, 3}}), q(1, 36)},
        {"P3+K1", Graph(4, {{0, 1}, {1, 2}}), q(13, 72)},
        {"P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}}), q(1, 9)},
        {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), q(1, 36)},
        {"K1,3", Graph(4, {{0, 1}, {0, 2}, {0, 3}}), q(5, 72)},
        {"K3+K1", Graph(4, {{0, 1}, {0, 2}, {1, 2}}), q(5, 72)},
        {"paw", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}), q(13, 72)},
        {"diamond", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), q(1, 8)},
        {"K4", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), q(1, 24)},
    };
  }();
  return table;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "figure1",    "normalization", "definition",   "agreement", "complement",
      "bounds",     "paths",         "closed-forms", "montecarlo"};
  return names;
}

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

class Recorder {
public:
  explicit Recorder(CheckResult& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& message) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < kMaxReportedFailures) r_.failures.push_back(message());
  }

private:
  CheckResult& r_;
};

std::string describe(const Graph& g) { return to_graph6(g); }

void figure1(Recorder& rec, const VerifyOptions& o) {
  std::map<int, int> per_order;
  for (const auto& ref : figure1_table()) {
    const Rational got = likelihood_exact(ref.graph, o.limits);
    rec.expect(got == ref.likelihood, [&] {
      return ref.name + ": expected " + to_string(ref.likelihood) + ", got " + to_string(got);
    });
    ++per_order[ref.graph.order()];
  }
  for (auto [t, count] : per_order) {
    const auto classes = enumerate_nonisomorphic(t, o.limits).size();
    rec.expect(classes == static_cast<std::size_t>(count), [&] {
      return "order " + std::to_string(t) + " has " + std::to_string(classes) +
             " classes, table lists " + std::to_string(count);
    });
  }
}

void normalization(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= o.max_order; ++t) {
    Rational sum = 0;
    for (const auto& e : likelihood_census(t, o.limits)) sum += e.likelihood;
    rec.expect(sum == 1, [&] {
      return "order " + std::to_string(t) + " census sums to " + to_string(sum);
    });
  }
}

void definition(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= std::min(o.max_order, kMaxProcessOracleOrder); ++t) {
    std::map<CanonicalKey, Rational> census;
    for (const auto& e : likelihood_census(t, o.limits)) census[e.key] = e.likelihood;
    std::map<CanonicalKey, Rational> oracle;
    for (const auto& c : process_distribution_oracle(t, o.limits)) oracle[c.key] = c.probability;
    rec.expect(census == oracle, [&] {
      return "order " + std::to_string(t) + ": census differs from the process distribution";
    });
  }
}

void agreement(Recorder& rec, const VerifyOptions& o) {
  const int top = std::min({o.max_order, o.limits.paths, o.limits.oracle});
  for (int t = 1; t <= top; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t, o.limits)) {
      const Rational dp = likelihood_exact(g, o.limits);
      const Rational orderings = likelihood_by_orderings(g, o.limits);
      const auto paths = enumerate_path_constructions(g, o.limits);
      const Rational from_paths = likelihood_from_paths(paths);
      rec.expect(dp == orderings && dp == from_paths, [&] {
        return describe(g) + ": dp " + to_string(dp) + ", orderings " + to_string(orderings) +
               ", paths " + to_string(from_paths);
      });
    }
  }
}

void complement_suite(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= o.max_order; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t, o.limits)) {
      const Rational a = likelihood_exact(g, o.limits);
      const Rational b = likelihood_exact(complement(g), o.limits);
      rec.expect(a == b && a > 0, [&] {
        return describe(g) + ": L = " + to_string(a) + ", complement " + to_string(b);
      });
    }
  }
}

void bounds(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= o.max_order; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t, o.limits)) {
      const Rational l = likelihood_exact(g, o.limits);
      const LikelihoodBounds b = likelihood_bounds(g, o.limits);
      rec.expect(b.lower <= l && l <= b.upper && b.upper <= 1 && b.lower > 0, [&] {
        return describe(g) + ": " + to_string(l) + " outside [" + to_string(b.lower) + ", " +
               to_string(b.upper) + "]";
      });
    }
  }
}

void paths(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= std::min(o.max_order, o.limits.paths); ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t, o.limits)) {
      const auto count = enumerate_path_constructions(g, o.limits).size();
      const BigInt aut = automorphism_count(g, o.limits);
      rec.expect(count > 0 && BigInt(static_cast<unsigned long>(count)) * aut == factorial(t),
                 [&] {
                   return describe(g) + ": " + std::to_string(count) + " paths, |Aut| " +
                          to_string(aut);
                 });
    }
  }
}

void closed_forms(Recorder& rec, const VerifyOptions& o) {
  const int top = std::min(o.family_max_order, o.limits.dp);
  const auto check = [&](const FamilySpec& spec) {
    const Rational closed = family_closed_form(spec);
    const Rational dp = likelihood_exact(make_family(spec), o.limits);
    rec.expect(closed == dp, [&] {
      return std::string(family_name(spec.kind)) + " t=" + std::to_string(spec.order) +
             " s=" + std::to_string(spec.size) + ": closed " + to_string(closed) + ", dp " +
             to_string(dp);
    });
  };
  for (int t = 1; t <= top; ++t) {
    check({Family::complete, t, 0});
    check({Family::empty, t, 0});
    if (t >= 2) {
      check({Family::star, t, 0});
      check({Family::one_edge, t, 0});
    }
    for (int s = 0; s <= 3 && 2 * s <= t; ++s) check({Family::matching, t, s});
  }
  for (int n = 3; n <= top; ++n) {
    const Rational rel = cycle_from_path_relation(n, o.limits);
    const Rational dp = likelihood_exact(make_family({Family::cycle, n, 0}), o.limits);
    rec.expect(rel == dp, [&] {
      return "cycle n=" + std::to_string(n) + ": relation " + to_string(rel) + ", dp " +
             to_string(dp);
    });
  }
}

void montecarlo(Recorder& rec, const VerifyOptions& o) {
  for (int t = 1; t <= std::min(o.max_order, 4); ++t) {
    const auto counts = sample_distribution(t, o.samples, o.seed + t, o.threads, o.limits);
    for (const auto& e : likelihood_census(t, o.limits)) {
      const auto it = counts.find(e.key);
      const Estimate est = make_estimate(it == counts.end() ? 0 : it->second, o.samples);
      const double exact = e.likelihood.get_d();
      rec.expect(std::abs(est.p_hat - exact) <= 4.0 * est.std_error, [&] {
        return e.key.graph6() + ": p_hat " + std::to_string(est.p_hat) + " vs " +
               std::to_string(exact) + " (stderr " + std::to_string(est.std_error) + ")";
      });
    }
  }
}

} // namespace

CheckResult run_verify_suite(std::string_view suite, const VerifyOptions& options) {
  static const std::map<std::string, std::function<void(Recorder&, const VerifyOptions&)>,
                        std::less<>>
      suites{{"figure1", figure1},       {"normalization", normalization},
             {"definition", definition}, {"agreement", agreement},
             {"complement", complement_suite}, {"bounds", bounds},
             {"paths", paths},           {"closed-forms", closed_forms},
             {"montecarlo", montecarlo}};
  const auto it = suites.find(suite);
  if (it == suites.end()) {
    throw InvalidParameter("unknown verify suite '" + std::string(suite) + "'");
  }
  CheckResult result;
  result.suite = std::string(suite);
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  it->second(rec, options);
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

} // namespace glik
