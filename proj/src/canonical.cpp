#include "glik/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "glik/errors.hpp"

namespace glik {

namespace {

// Ordered partition: cells[v] is the index of v's cell; indices are dense and
// the cell order is part of the partition.
using Cells = std::vector<int>;

int relabel_dense(Cells& cells, const std::vector<std::vector<int>>& sig) {
  const int n = static_cast<int>(cells.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int next = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++next;
    cells[idx[i]] = next;
  }
  return next + 1;
}

int cell_count(const Cells& cells) {
  return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
}

// Split cells by neighbor counts into every cell until stable (equitable).
// Fragments are ordered by their count vectors, so the result is
// isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  int count = cell_count(cells);
  std::vector<std::vector<int>> sig(n);
  while (count < n) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(count + 1, 0);
      sig[v][0] = cells[v];
      for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
        ++sig[v][1 + cells[std::countr_zero(m)]];
      }
    }
    const int next = relabel_dense(cells, sig);
    if (next == count) break;
    count = next;
  }
}

Cells individualize(const Graph& g, const Cells& cells, Vertex w) {
  const int n = g.order();
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) sig[v] = {cells[v], v == w ? 0 : 1};
  Cells out(cells);
  relabel_dense(out, sig);
  refine(g, out);
  return out;
}

// graph6 bytes of g with vertex order[i] placed at position i.
std::string leaf_code(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexMask row = g.neighbors(order[j]);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row >> order[i]) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  Canonicalization run() {
    Cells root(n_, 0);
    refine(g_, root);
    descend(root, 0);

    Canonicalization out;
    out.key = CanonicalKey(best_code_);
    out.labeling = best_order_;
    out.generators = generators_;
    out.automorphisms = 1;
    for (std::size_t k = 0; k < first_path_.size(); ++k) {
      const std::vector<Vertex> prefix(first_path_.begin(), first_path_.begin() + k);
      UnionFind orbits = orbits_fixing(prefix);
      const int root_u = orbits.find(first_path_[k]);
      int size = 0;
      for (Vertex v = 0; v < n_; ++v) size += orbits.find(v) == root_u ? 1 : 0;
      out.automorphisms *= size;
    }
    return out;
  }

private:
  UnionFind orbits_fixing(const std::vector<Vertex>& prefix) const {
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return gen[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    return uf;
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(mm.first - a.begin());
  }

  void add_generator(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gen(n_);
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      gen[from[p]] = to[p];
      identity = identity && from[p] == to[p];
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  // Returns the depth at which the search should resume: a value below
  // `depth` abandons this subtree up to that ancestor.
  int descend(const Cells& cells, int depth) {
    if (cell_count(cells) == n_) return leaf(cells, depth);

    int target = -1;
    {
      std::vector<int> sizes(n_, 0);
      for (int c : cells) ++sizes[c];
      for (int c = 0; c < n_ && target < 0; ++c) {
        if (sizes[c] > 1) target = c;
      }
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v) {
      if (cells[v] == target) members.push_back(v);
    }

    std::vector<Vertex> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    UnionFind orbits(n_);
    for (Vertex w : members) {
      if (gens_seen != generators_.size()) {
        orbits = orbits_fixing(path_);
        gens_seen = generators_.size();
      }
      const bool pruned = std::any_of(explored.begin(), explored.end(), [&](Vertex x) {
        return orbits.find(x) == orbits.find(w);
      });
      if (pruned) continue;
      explored.push_back(w);

      path_.push_back(w);
      const int resume = descend(individualize(g_, cells, w), depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  int leaf(const Cells& cells, int depth) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[cells[v]] = v;
    std::string code = leaf_code(g_, order);

    if (first_code_.empty()) {
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path_;
      return depth;
    }
    if (code == first_code_) {
      add_generator(first_order_, order);
      return common_prefix(path_, first_path_);
    }
    if (code == best_code_) {
      add_generator(best_order_, order);
      return common_prefix(path_, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_path_ = path_;
    }
    return depth;
  }

  const Graph& g_;
  const int n_;
  std::vector<Vertex> path_;
  std::string first_code_, best_code_;
  std::vector<Vertex> first_order_, best_order_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
};

} // namespace

Canonicalization canonicalize(const Graph& g, const Limits& limits) {
  check_limit("canonical", limits.canonical, g.order());
  check_limit("graph6 short form", kMaxGraph6Order, g.order());
  return Search(g).run();
}

CanonicalKey canonical_key(const Graph& g, const Limits& limits) {
  return canonicalize(g, limits).key;
}

bool are_isomorphic(const Graph& g, const Graph& h, const Limits& limits) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_key(g, limits) == canonical_key(h, limits);
}

BigInt automorphism_count(const Graph& g, const Limits& limits) {
  return canonicalize(g, limits).automorphisms;
}

Graph canonical_graph(const Graph& g, const Limits& limits) {
  return reorder(g, canonicalize(g, limits).labeling);
}

std::vector<Graph> enumerate_nonisomorphic(int t, const Limits& limits) {
  if (t < 1) throw InvalidParameter("census order must be at least 1");
  check_limit("census", limits.census, t);
  check_limit("canonical", limits.canonical, t);

  std::vector<Graph> classes{Graph(1)};
  for (int n = 2; n <= t; ++n) {
    std::map<CanonicalKey, bool> seen;
    for (const Graph& h : classes) {
      std::vector<VertexMask> rows = h.rows();
      rows.push_back(0);
      for (VertexMask attach = 0; attach < (VertexMask{1} << (n - 1)); ++attach) {
        for (int v = 0; v + 1 < n; ++v) {
          const VertexMask bit = VertexMask{1} << (n - 1);
          rows[v] = ((attach >> v) & 1U) ? (h.rows()[v] | bit) : h.rows()[v];
        }
        rows[n - 1] = attach;
        seen.emplace(canonical_key(Graph::from_rows(rows), limits), true);
      }
    }
    classes.clear();
    for (const auto& [key, unused] : seen) classes.push_back(parse_graph6(key.graph6()));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const Graph& a, const Graph& b) {
    return a.edge_count() < b.edge_count();
  });
  return classes;
}

} // namespace glik
