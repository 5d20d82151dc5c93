#include "glik/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "glik/errors.hpp"

namespace glik {

LimitExceeded::LimitExceeded(std::string limit_name, int limit, int requested)
    : std::runtime_error("order " + std::to_string(requested) + " exceeds the " +
                         limit_name + " limit of " + std::to_string(limit)),
      limit_name_(std::move(limit_name)), limit_(limit), requested_(requested) {}

MalformedInput::MalformedInput(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

void check_limit(const char* name, int limit, int requested) {
  if (requested > limit) {
    throw LimitExceeded(name, limit, requested);
  }
}

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw InvalidParameter("graph order must be in [1, " + std::to_string(kMaxOrder) +
                           "], got " + std::to_string(order));
  }
}

std::vector<VertexMask> rows_from_edges(int order, std::span<const Edge> edges) {
  check_order(order);
  std::vector<VertexMask> rows(order, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw InvalidParameter("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} out of range for order " + std::to_string(order));
    }
    if (u == v) {
      throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    }
    rows[u] |= VertexMask{1} << v;
    rows[v] |= VertexMask{1} << u;
  }
  return rows;
}

} // namespace

Graph::Graph(int order) : Graph(rows_from_edges(order, {}), true) {}

Graph::Graph(int order, std::span<const Edge> edges)
    : Graph(rows_from_edges(order, edges), true) {}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(rows_from_edges(order, std::span<const Edge>(edges.begin(), edges.size())),
            true) {}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) {
      throw InvalidParameter("neighbor index out of range at vertex " + std::to_string(v));
    }
    if ((rows[v] >> v) & 1U) {
      throw InvalidParameter("self-loop at vertex " + std::to_string(v));
    }
    for (VertexMask m = rows[v]; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (!((rows[u] >> v) & 1U)) {
        throw InvalidParameter("asymmetric adjacency between " + std::to_string(v) +
                               " and " + std::to_string(u));
      }
    }
  }
  return Graph(std::move(rows), true);
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexMask m = rows_[u] >> u; m; m &= m - 1) {
      out.emplace_back(u, u + std::countr_zero(m));
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

VertexMask Graph::vertex_mask() const {
  return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
}

Graph complement(const Graph& g) {
  const VertexMask all = g.vertex_mask();
  std::vector<VertexMask> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = ~g.neighbors(v) & all & ~(VertexMask{1} << v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw InvalidParameter("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
    }
    mask |= VertexMask{1} << v;
  }
  return induced_subgraph(g, mask);
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices & ~g.vertex_mask()) {
    throw InvalidParameter("vertex set exceeds graph order " + std::to_string(g.order()));
  }
  std::vector<Vertex> kept;
  for (VertexMask m = vertices; m; m &= m - 1) kept.push_back(std::countr_zero(m));
  if (kept.empty()) {
    throw InvalidParameter("induced subgraph needs at least one vertex");
  }
  return reorder(g, kept);
}

namespace {

void check_permutation(std::span<const Vertex> perm, int n, bool allow_partial) {
  if (!allow_partial && static_cast<int>(perm.size()) != n) {
    throw InvalidParameter("expected a permutation of " + std::to_string(n) +
                           " vertices, got " + std::to_string(perm.size()));
  }
  VertexMask seen = 0;
  for (Vertex v : perm) {
    if (v < 0 || v >= n) {
      throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    }
    if ((seen >> v) & 1U) {
      throw InvalidParameter("vertex " + std::to_string(v) + " repeated");
    }
    seen |= VertexMask{1} << v;
  }
}

} // namespace

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  check_permutation(perm, g.order(), false);
  std::vector<VertexMask> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
      rows[perm[v]] |= VertexMask{1} << perm[std::countr_zero(m)];
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph reorder(const Graph& g, std::span<const Vertex> ordering) {
  check_permutation(ordering, g.order(), true);
  const int k = static_cast<int>(ordering.size());
  std::vector<VertexMask> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.has_edge(ordering[i], ordering[j])) rows[i] |= VertexMask{1} << j;
    }
  }
  return Graph::from_rows(std::move(rows));
}

void validate(const FamilySpec& spec) {
  const auto fail = [&](const std::string& why) {
    throw InvalidParameter(std::string(family_name(spec.kind)) + ": " + why);
  };
  if (spec.order < 1 || spec.order > kMaxOrder) fail("order out of range");
  switch (spec.kind) {
  case Family::star:
    if (spec.order < 2) fail("star requires t >= 2");
    break;
  case Family::cycle:
    if (spec.order < 3) fail("cycle requires t >= 3");
    break;
  case Family::one_edge:
    if (spec.order < 2) fail("one edge requires t >= 2");
    break;
  case Family::matching:
    if (spec.size < 0 || 2 * spec.size > spec.order) fail("matching requires 0 <= 2s <= t");
    break;
  default:
    break;
  }
}

Graph make_family(const FamilySpec& spec) {
  validate(spec);
  const int t = spec.order;
  std::vector<Edge> e;
  switch (spec.kind) {
  case Family::complete:
    for (int u = 0; u < t; ++u)
      for (int v = u + 1; v < t; ++v) e.emplace_back(u, v);
    break;
  case Family::star:
    for (int v = 1; v < t; ++v) e.emplace_back(0, v);
    break;
  case Family::path:
    for (int v = 0; v + 1 < t; ++v) e.emplace_back(v, v + 1);
    break;
  case Family::cycle:
    for (int v = 0; v + 1 < t; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, t - 1);
    break;
  case Family::matching:
    for (int j = 0; j < spec.size; ++j) e.emplace_back(2 * j, 2 * j + 1);
    break;
  case Family::one_edge:
    e.emplace_back(0, 1);
    break;
  case Family::empty:
    break;
  }
  return Graph(t, e);
}

std::string_view family_name(Family kind) {
  switch (kind) {
  case Family::complete: return "complete";
  case Family::star: return "star";
  case Family::path: return "path";
  case Family::cycle: return "cycle";
  case Family::empty: return "empty";
  case Family::matching: return "matching";
  case Family::one_edge: return "one-edge";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "complete" || name == "K") return Family::complete;
  if (name == "star" || name == "S") return Family::star;
  if (name == "path" || name == "P") return Family::path;
  if (name == "cycle" || name == "C") return Family::cycle;
  if (name == "empty" || name == "E") return Family::empty;
  if (name == "matching" || name == "matching-plus-isolates") return Family::matching;
  if (name == "one-edge" || name == "one-edge-plus-isolates") return Family::one_edge;
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);         // outer 5-cycle
    e.emplace_back(i, i + 5);               // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return Graph(10, e);
}

} // namespace glik
