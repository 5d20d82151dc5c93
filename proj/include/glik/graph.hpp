#ifndef GLIK_GRAPH_HPP
#define GLIK_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glik/limits.hpp"

namespace glik {

using Vertex = int;
using VertexMask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is held as one bitmask per vertex, so the order is capped at
/// kMaxOrder. Instances are immutable once built; every constructor checks
/// symmetry, loop-freeness and index range.
class Graph {
public:
  /// Edgeless graph on `order` vertices (order >= 1).
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  /// Build from adjacency rows; rows.size() is the order.
  static Graph from_rows(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const;
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const; // sorted descending
  const std::vector<VertexMask>& rows() const { return rows_; }

  /// All vertices, as a mask.
  VertexMask vertex_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  explicit Graph(std::vector<VertexMask> rows, bool) : rows_(std::move(rows)) {}
  std::vector<VertexMask> rows_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..k-1 in ascending order of
/// the original index.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, VertexMask vertices);

/// Image of g under the vertex map v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Graph whose vertex i is ordering[i]: the labeled graph produced when g's
/// vertices are added in that order.
Graph reorder(const Graph& g, std::span<const Vertex> ordering);

enum class Family { complete, star, path, cycle, empty, matching, one_edge };

struct FamilySpec {
  Family kind = Family::complete;
  int order = 1;
  int size = 0; // matching size s; ignored for other kinds
};

/// Throws InvalidParameter if the parameters are not admissible for the kind.
void validate(const FamilySpec& spec);
Graph make_family(const FamilySpec& spec);

std::string_view family_name(Family kind);
/// Accepts the names returned by family_name plus a few aliases
/// ("matching-plus-isolates", "one-edge-plus-isolates", "K", "S", ...).
Family parse_family(std::string_view name);

Graph petersen_graph();

// graph6 (short form, order <= 62).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// {"order": t, "edges": [[u, v], ...]} with u < v, lexicographically sorted.
Graph parse_edge_list_json(std::string_view text);
std::string to_edge_list_json(const Graph& g);

} // namespace glik

#endif // GLIK_GRAPH_HPP
