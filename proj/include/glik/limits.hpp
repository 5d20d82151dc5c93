#ifndef GLIK_LIMITS_HPP
#define GLIK_LIMITS_HPP

namespace glik {

// Every algorithm in this library is exponential in the graph order. These
// are the default ceilings; each one is overridable (CLI: --<name>-limit).
struct Limits {
  int canonical = 16;  // canonical_key, automorphism_count, are_isomorphic
  int census = 7;      // enumerate_nonisomorphic, likelihood_census
  int oracle = 9;      // likelihood_by_orderings (t! orderings)
  int paths = 8;       // enumerate_path_constructions
  int dp = 20;         // likelihood_exact (2^t subsets)
};

// Absolute ceilings imposed by the data layout, not overridable.
inline constexpr int kMaxOrder = 64;         // adjacency rows are 64-bit masks
inline constexpr int kMaxGraph6Order = 62;   // short-form graph6 only
inline constexpr int kMaxOrderingOrder = 13; // back-degree products fit in 64 bits
inline constexpr int kMaxPathsOrder = 16;    // labeled matrices fit in 128 bits
inline constexpr int kMaxDpOrder = 30;
inline constexpr int kMaxProcessOracleOrder = 5;

void check_limit(const char* name, int limit, int requested);

} // namespace glik

#endif // GLIK_LIMITS_HPP
