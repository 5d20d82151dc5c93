#ifndef GLIK_CANONICAL_HPP
#define GLIK_CANONICAL_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "glik/graph.hpp"
#include "glik/limits.hpp"
#include "glik/rational.hpp"

namespace glik {

/// Isomorphism-class identifier: the graph6 encoding of the canonical
/// relabeling (order byte followed by the lexicographically smallest
/// upper-triangle bitstring reachable by the refinement search).
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  /// The key is itself a valid graph6 string of a representative.
  const std::string& graph6() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : bytes_[0] - 63; }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
  std::string bytes_;
};

struct Canonicalization {
  CanonicalKey key;
  /// labeling[i] is the vertex of g placed at canonical position i.
  std::vector<Vertex> labeling;
  BigInt automorphisms;
  /// Automorphisms discovered during the search; they generate Aut(g).
  std::vector<std::vector<Vertex>> generators;
};

/// Individualization-refinement search over equitable ordered partitions with
/// orbit pruning from discovered automorphisms.
Canonicalization canonicalize(const Graph& g, const Limits& limits = {});

CanonicalKey canonical_key(const Graph& g, const Limits& limits = {});
bool are_isomorphic(const Graph& g, const Graph& h, const Limits& limits = {});
BigInt automorphism_count(const Graph& g, const Limits& limits = {});

/// The canonical representative: g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g, const Limits& limits = {});

/// One canonical representative per isomorphism class of order t, sorted by
/// edge count then key. Built by extending every class of order t-1 with a
/// new vertex in all 2^(t-1) ways and deduplicating by canonical key.
std::vector<Graph> enumerate_nonisomorphic(int t, const Limits& limits = {});

} // namespace glik

template <>
struct std::hash<glik::CanonicalKey> {
  std::size_t operator()(const glik::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};

#endif // GLIK_CANONICAL_HPP
