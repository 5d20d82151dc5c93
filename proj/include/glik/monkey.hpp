#ifndef GLIK_MONKEY_HPP
#define GLIK_MONKEY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glik/canonical.hpp"
#include "glik/graph.hpp"
#include "glik/limits.hpp"

namespace glik {

/// SplitMix64 (Steele, Lea & Flood): state += 0x9E3779B97F4A7C15, then the
/// output is the state passed through the mix64 finalizer. Reference vector:
/// seed 0 yields 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform on [0, n) by rejection: draws below (2^64 - n) mod n are
  /// discarded, so one draw is consumed except with probability < n / 2^64.
  std::uint64_t uniform(std::uint64_t n);

  /// Independent stream `index` of a master seed:
  /// SplitMix64(mix64(seed + 0x9E3779B97F4A7C15 * (index + 1))).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  static std::uint64_t mix64(std::uint64_t z);

private:
  std::uint64_t state_;
};

/// Uniform k-subset of {0..n-1} (sorted) by a partial Fisher-Yates shuffle;
/// consumes exactly k uniform() calls.
std::vector<Vertex> uniform_subset(SplitMix64& rng, int n, int k);

struct GrowthStep {
  int degree = 0;
  std::vector<Vertex> neighbors; // sorted, all < the new vertex
};

struct GrowthTrace {
  std::vector<GrowthStep> steps;

  Graph rebuild() const;
  /// One line per step: "<degree>:<n1>,<n2>,...".
  std::string serialize() const;
};

struct Growth {
  Graph graph;
  GrowthTrace trace;
};

/// Runs the growth process for t steps. Step i (1-based) adds vertex i-1:
/// one uniform(i) draw for its degree k, then uniform_subset(i-1, k).
Growth grow(int t, SplitMix64& rng);
Growth grow(int t, std::uint64_t seed);

struct Estimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double p_hat = 0.0;
  double std_error = 0.0; // sqrt(p_hat (1 - p_hat) / samples)
};

/// Samples are split into blocks of kSamplesPerStream; block b is drawn from
/// SplitMix64::stream(seed, b). Totals do not depend on `threads`.
inline constexpr std::uint64_t kSamplesPerStream = 1 << 16;

Estimate estimate_likelihood(const Graph& target, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1, const Limits& limits = {});

/// Hit counts per isomorphism class over `samples` growths of order t.
std::map<CanonicalKey, std::uint64_t> sample_distribution(int t, std::uint64_t samples,
                                                          std::uint64_t seed,
                                                          unsigned threads = 1,
                                                          const Limits& limits = {});

Estimate make_estimate(std::uint64_t hits, std::uint64_t samples);

} // namespace glik

#endif // GLIK_MONKEY_HPP
