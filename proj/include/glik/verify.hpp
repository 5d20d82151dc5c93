#ifndef GLIK_VERIFY_HPP
#define GLIK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glik/graph.hpp"
#include "glik/limits.hpp"
#include "glik/rational.hpp"

namespace glik {

/// Published likelihood of one small graph.
struct ReferenceValue {
  std::string name;
  Graph graph;
  Rational likelihood;
};

/// The 18 published values for every isomorphism class with t <= 4.
const std::vector<ReferenceValue>& figure1_table();

struct VerifyOptions {
  int max_order = 6;       // sweep ceiling for the exhaustive suites
  int family_max_order = 9;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0x5EEDULL;
  unsigned threads = 1;
  Limits limits;
};

struct CheckResult {
  std::string suite;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures; // capped at a handful of messages
  double seconds = 0.0;
};

/// figure1, normalization, definition, agreement, complement, bounds, paths,
/// closed-forms, montecarlo.
const std::vector<std::string>& verify_suite_names();

/// Throws InvalidParameter for an unknown suite name.
CheckResult run_verify_suite(std::string_view suite, const VerifyOptions& options);

} // namespace glik

#endif // GLIK_VERIFY_HPP
