#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "glik/errors.hpp"
#include "glik/likelihood.hpp"

namespace glik {

namespace {

using MatrixCode = unsigned __int128;

struct CodeHash {
  std::size_t operator()(MatrixCode c) const noexcept {
    const auto lo = static_cast<std::uint64_t>(c);
    const auto hi = static_cast<std::uint64_t>(c >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

// Upper triangle of the labeled graph induced by `ordering`, column by column;
// bit position of (i, j), i < j, is j(j-1)/2 + i. The first `prefix` vertices
// occupy the low j(j-1)/2 bits, so prefixes are masks of the full code.
MatrixCode ordering_code(const Graph& g, const std::vector<Vertex>& ordering) {
  MatrixCode code = 0;
  int bit = 0;
  for (std::size_t j = 1; j < ordering.size(); ++j) {
    const VertexMask row = g.neighbors(ordering[j]);
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((row >> ordering[i]) & 1U) code |= MatrixCode{1} << bit;
    }
  }
  return code;
}

void check_paths_limit(const Graph& g, const Limits& limits) {
  check_limit("paths", limits.paths, g.order());
  check_limit("paths layout", kMaxPathsOrder, g.order());
}

} // namespace

std::vector<PathConstruction> enumerate_path_constructions(const Graph& g,
                                                           const Limits& limits) {
  check_paths_limit(g, limits);
  const int t = g.order();
  const BigInt t_factorial = factorial(t);

  std::vector<PathConstruction> out;
  std::unordered_set<MatrixCode, CodeHash> seen;
  std::vector<Vertex> ordering(t);
  std::iota(ordering.begin(), ordering.end(), 0);
  do {
    // Two orderings induce the same labeled matrix iff they differ by an
    // automorphism, so the first (lexicographically smallest) ordering of
    // each matrix is its coset representative.
    if (!seen.insert(ordering_code(g, ordering)).second) continue;
    PathConstruction p;
    p.ordering = ordering;
    p.back_degrees = back_degrees(g, ordering);
    BigInt den = t_factorial;
    for (int i = 0; i < t; ++i) den *= binomial(i, p.back_degrees[i]);
    p.weight = make_rational(1, den);
    out.push_back(std::move(p));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return out;
}

Rational likelihood_from_paths(std::span<const PathConstruction> paths) {
  Rational sum = 0;
  for (const auto& p : paths) sum += p.weight;
  return sum;
}

std::vector<PathTreeNode> path_tree(const Graph& g, const Limits& limits) {
  const std::vector<PathConstruction> paths = enumerate_path_constructions(g, limits);
  const int t = g.order();

  std::vector<PathTreeNode> nodes;
  std::map<std::pair<int, MatrixCode>, int> index;
  for (const auto& p : paths) {
    const MatrixCode full = ordering_code(g, p.ordering);
    int parent = -1;
    for (int level = 1; level <= t; ++level) {
      const int bits = level * (level - 1) / 2;
      const MatrixCode prefix =
          bits == 0 ? MatrixCode{0} : full & ((MatrixCode{1} << bits) - 1);
      auto [it, inserted] = index.try_emplace({level, prefix}, static_cast<int>(nodes.size()));
      if (inserted) {
        PathTreeNode node;
        node.level = level;
        node.parent = parent;
        const std::vector<Vertex> head(p.ordering.begin(), p.ordering.begin() + level);
        node.prefix = to_graph6(reorder(g, head));
        node.back_degree = p.back_degrees[level - 1];
        node.step_probability =
            make_rational(1, BigInt(level) * binomial(level - 1, node.back_degree));
        nodes.push_back(std::move(node));
      }
      ++nodes[it->second].leaves;
      parent = it->second;
    }
  }

  // Renumber in preorder so each subtree is contiguous.
  std::vector<std::vector<int>> children(nodes.size());
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    (nodes[i].parent < 0 ? roots : children[nodes[i].parent]).push_back(i);
  }
  std::vector<PathTreeNode> ordered;
  std::vector<int> renumber(nodes.size());
  std::vector<int> stack(roots.rbegin(), roots.rend());
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    renumber[i] = static_cast<int>(ordered.size());
    ordered.push_back(std::move(nodes[i]));
    if (ordered.back().parent >= 0) ordered.back().parent = renumber[ordered.back().parent];
    stack.insert(stack.end(), children[i].rbegin(), children[i].rend());
  }
  return ordered;
}

} // namespace glik
