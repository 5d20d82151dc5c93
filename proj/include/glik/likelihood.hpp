#ifndef GLIK_LIKELIHOOD_HPP
#define GLIK_LIKELIHOOD_HPP

#include <span>
#include <string>
#include <vector>

#include "glik/canonical.hpp"
#include "glik/graph.hpp"
#include "glik/limits.hpp"
#include "glik/rational.hpp"

namespace glik {

/// One build order of G up to automorphism: `ordering` is the lexicographically
/// smallest vertex sequence in its Aut(G)-coset.
struct PathConstruction {
  std::vector<Vertex> ordering;
  /// back_degrees[i]: neighbors of ordering[i] among ordering[0..i).
  std::vector<int> back_degrees;
  /// prod_i 1 / (i * C(i-1, d_i)), i = 1..t.
  Rational weight;
};

struct LikelihoodBounds {
  Rational lower;
  Rational upper;
};

struct CensusEntry {
  CanonicalKey key;
  Graph graph; // canonical representative
  Rational likelihood;
  BigInt automorphisms;
};

/// Probability-weighted distribution over isomorphism classes of order t.
struct ClassProbability {
  CanonicalKey key;
  Rational probability;
};

std::vector<int> back_degrees(const Graph& g, std::span<const Vertex> ordering);

/// Probability that the growth process adds g's vertices in exactly this
/// order with exactly these adjacencies. Throws InvalidParameter unless
/// `ordering` is a permutation of g's vertices.
Rational ordering_probability(const Graph& g, std::span<const Vertex> ordering);

/// Sum of ordering_probability over all t! orderings, divided by |Aut(g)|.
Rational likelihood_by_orderings(const Graph& g, const Limits& limits = {});

/// Layered subset dynamic program:
///   f(empty) = 1,  f(S) = sum_{v in S} f(S \ v) / (|S| * C(|S|-1, deg_S(v)))
/// and the likelihood is f(V) / |Aut(g)|. Only two cardinality layers are
/// held at once; entries of one layer may be filled by `threads` workers
/// (0 = hardware concurrency) with identical results.
///
/// The automorphism count needed here uses the dp limit in place of the
/// canonical limit.
Rational likelihood_exact(const Graph& g, const Limits& limits = {}, unsigned threads = 1);

/// One representative per Aut(g)-coset of orderings, in lexicographic order.
/// Cosets are identified by the labeled adjacency matrix each ordering
/// induces, so the enumeration does not consult the automorphism group.
std::vector<PathConstruction> enumerate_path_constructions(const Graph& g,
                                                           const Limits& limits = {});

Rational likelihood_from_paths(std::span<const PathConstruction> paths);

/// Node of the prefix tree T_G: one node per distinct labeled prefix H_i
/// occurring in some path construction. Nodes are listed in preorder.
struct PathTreeNode {
  int level = 1;       // number of vertices in the prefix
  int parent = -1;     // index into the node list, -1 for the root
  std::string prefix;  // graph6 of the labeled prefix
  int back_degree = 0; // degree of the vertex added at this level
  Rational step_probability;
  int leaves = 0;      // path constructions through this node
};

std::vector<PathTreeNode> path_tree(const Graph& g, const Limits& limits = {});

/// 1/(|Aut| prod_i C(i-1, floor((i-1)/2)))  <=  L(g)  <=  1/|Aut|.
LikelihoodBounds likelihood_bounds(const Graph& g, const Limits& limits = {});

/// One entry per isomorphism class of order t, in enumerate_nonisomorphic
/// order. The likelihoods sum to 1.
std::vector<CensusEntry> likelihood_census(int t, const Limits& limits = {});

/// Reference distribution straight from the growth process: every labeled
/// outcome on t <= 5 vertices weighted by its step probabilities, grouped by
/// canonical key (sorted by key).
std::vector<ClassProbability> process_distribution_oracle(int t, const Limits& limits = {});

} // namespace glik

#endif // GLIK_LIKELIHOOD_HPP
