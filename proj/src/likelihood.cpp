#include "glik/likelihood.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

#include "glik/errors.hpp"

namespace glik {

namespace {

// 64-bit binomials for subset ranking and back-degree products.
struct SmallBinomials {
  std::uint64_t c[64][64] = {};
  SmallBinomials() {
    for (int n = 0; n < 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

const SmallBinomials& small_binomials() {
  static const SmallBinomials table;
  return table;
}

void check_permutation(const Graph& g, std::span<const Vertex> ordering) {
  if (static_cast<int>(ordering.size()) != g.order()) {
    throw InvalidParameter("ordering has " + std::to_string(ordering.size()) +
                           " entries for a graph of order " + std::to_string(g.order()));
  }
  VertexMask seen = 0;
  for (Vertex v : ordering) {
    if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) {
      throw InvalidParameter("ordering is not a permutation of the vertices");
    }
    seen |= VertexMask{1} << v;
  }
}

} // namespace

std::vector<int> back_degrees(const Graph& g, std::span<const Vertex> ordering) {
  check_permutation(g, ordering);
  std::vector<int> d(ordering.size());
  VertexMask placed = 0;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    d[i] = std::popcount(g.neighbors(ordering[i]) & placed);
    placed |= VertexMask{1} << ordering[i];
  }
  return d;
}

Rational ordering_probability(const Graph& g, std::span<const Vertex> ordering) {
  const std::vector<int> d = back_degrees(g, ordering);
  BigInt den = 1;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    den *= static_cast<unsigned long>(i);
    den *= binomial(static_cast<int>(i) - 1, d[i - 1]);
  }
  return make_rational(1, den);
}

Rational likelihood_by_orderings(const Graph& g, const Limits& limits) {
  const int t = g.order();
  check_limit("oracle", limits.oracle, t);
  check_limit("ordering product", kMaxOrderingOrder, t);
  const auto& c = small_binomials().c;

  // Every ordering contributes 1/(t! * P) with P = prod C(i-1, d_i); tally P.
  std::map<std::uint64_t, std::uint64_t> tally;
  std::vector<Vertex> ordering(t);
  std::iota(ordering.begin(), ordering.end(), 0);
  do {
    std::uint64_t product = 1;
    VertexMask placed = 0;
    for (int i = 0; i < t; ++i) {
      product *= c[i][std::popcount(g.neighbors(ordering[i]) & placed)];
      placed |= VertexMask{1} << ordering[i];
    }
    ++tally[product];
  } while (std::next_permutation(ordering.begin(), ordering.end()));

  Rational sum = 0;
  for (auto [product, count] : tally) {
    sum += make_rational(BigInt(static_cast<unsigned long>(count)),
                         BigInt(static_cast<unsigned long>(product)));
  }
  Limits canon = limits;
  canon.canonical = std::max(limits.canonical, t);
  sum /= factorial(t) * automorphism_count(g, canon);
  return sum;
}

namespace {

// Smallest subset (as a mask) of colex rank `rank` among k-subsets.
VertexMask colex_unrank(std::uint64_t rank, int k) {
  const auto& c = small_binomials().c;
  VertexMask mask = 0;
  for (int i = k; i >= 1; --i) {
    int p = i - 1;
    while (c[p + 1][i] <= rank) ++p;
    rank -= c[p][i];
    mask |= VertexMask{1} << p;
  }
  return mask;
}

VertexMask next_same_popcount(VertexMask x) {
  const VertexMask low = x & -x;
  const VertexMask ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

struct LayerCoefficients {
  // coef[k][d] = lcm_k / C(k-1, d), lcm_k = lcm_d C(k-1, d)
  std::vector<std::vector<BigInt>> coef;
  BigInt denominator_scale = 1; // prod_k lcm_k
};

LayerCoefficients layer_coefficients(int t) {
  LayerCoefficients out;
  out.coef.resize(t + 1);
  for (int k = 1; k <= t; ++k) {
    BigInt l = 1;
    for (int d = 0; d < k; ++d) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), binomial(k - 1, d).get_mpz_t());
    }
    out.coef[k].resize(k);
    for (int d = 0; d < k; ++d) out.coef[k][d] = l / binomial(k - 1, d);
    out.denominator_scale *= l;
  }
  return out;
}

// Fills cur[begin, end) of layer k (colex order) from the previous layer.
void fill_layer(const Graph& g, int k, const std::vector<BigInt>& coef,
                const std::vector<BigInt>& prev, std::vector<BigInt>& cur,
                std::uint64_t begin, std::uint64_t end) {
  const auto& c = small_binomials().c;
  VertexMask subset = colex_unrank(begin, k);
  std::vector<int> bits(k);
  std::vector<std::uint64_t> before(k + 1), after(k + 1);
  for (std::uint64_t j = begin; j < end; ++j) {
    int i = 0;
    for (VertexMask m = subset; m; m &= m - 1) bits[i++] = std::countr_zero(m);
    // rank(S \ bits[i]) = sum_{l<i} C(b_l, l+1) + sum_{l>i} C(b_l, l)
    before[0] = 0;
    for (int l = 0; l < k; ++l) before[l + 1] = before[l] + c[bits[l]][l + 1];
    after[k] = 0;
    for (int l = k - 1; l >= 0; --l) after[l] = after[l + 1] + (l > 0 ? c[bits[l]][l] : 0);
    mpz_ptr acc = cur[j].get_mpz_t();
    for (int l = 0; l < k; ++l) {
      const int d = std::popcount(g.neighbors(bits[l]) & subset);
      const std::uint64_t rank = before[l] + after[l + 1];
      mpz_addmul(acc, prev[rank].get_mpz_t(), coef[d].get_mpz_t());
    }
    if (j + 1 < end) subset = next_same_popcount(subset);
  }
}

} // namespace

Rational likelihood_exact(const Graph& g, const Limits& limits, unsigned threads) {
  const int t = g.order();
  check_limit("dp", limits.dp, t);
  check_limit("dp layout", kMaxDpOrder, t);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  const LayerCoefficients lc = layer_coefficients(t);
  const auto& c = small_binomials().c;
  std::vector<BigInt> prev{BigInt(1)};
  for (int k = 1; k <= t; ++k) {
    const std::uint64_t size = c[t][k];
    std::vector<BigInt> cur(size);
    const std::uint64_t workers =
        size < 4096 ? 1 : std::min<std::uint64_t>(threads, size / 1024);
    if (workers <= 1) {
      fill_layer(g, k, lc.coef[k], prev, cur, 0, size);
    } else {
      std::vector<std::jthread> pool;
      for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t b = size * w / workers;
        const std::uint64_t e = size * (w + 1) / workers;
        pool.emplace_back([&, b, e] { fill_layer(g, k, lc.coef[k], prev, cur, b, e); });
      }
    }
    prev = std::move(cur);
  }

  Limits canon = limits;
  canon.canonical = std::max(limits.canonical, t);
  return make_rational(prev[0], factorial(t) * lc.denominator_scale *
                                    automorphism_count(g, canon));
}

LikelihoodBounds likelihood_bounds(const Graph& g, const Limits& limits) {
  const BigInt aut = automorphism_count(g, limits);
  BigInt central = 1;
  for (int i = 1; i <= g.order(); ++i) central *= binomial(i - 1, (i - 1) / 2);
  return {make_rational(1, aut * central), make_rational(1, aut)};
}

std::vector<CensusEntry> likelihood_census(int t, const Limits& limits) {
  std::vector<CensusEntry> out;
  for (Graph& rep : enumerate_nonisomorphic(t, limits)) {
    CensusEntry e{canonical_key(rep, limits), rep, likelihood_exact(rep, limits),
                  automorphism_count(rep, limits)};
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ClassProbability> process_distribution_oracle(int t, const Limits& limits) {
  if (t < 1) throw InvalidParameter("order must be at least 1");
  check_limit("process oracle", kMaxProcessOracleOrder, t);
  const int pairs = t * (t - 1) / 2;
  std::map<CanonicalKey, Rational> dist;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    // Bit p of `code` decides the p-th pair in (0,1), (0,2), (1,2), (0,3), ...
    std::vector<Edge> edges;
    int p = 0;
    for (int v = 1; v < t; ++v) {
      for (int u = 0; u < v; ++u, ++p) {
        if ((code >> p) & 1U) edges.emplace_back(u, v);
      }
    }
    const Graph labeled(t, edges);
    // Vertex i arrives at step i+1 and picks its back-neighbors among 0..i-1.
    BigInt den = 1;
    for (int i = 0; i < t; ++i) {
      const VertexMask earlier = (VertexMask{1} << i) - 1;
      den *= (i + 1);
      den *= binomial(i, std::popcount(labeled.neighbors(i) & earlier));
    }
    dist[canonical_key(labeled, limits)] += make_rational(1, den);
  }
  std::vector<ClassProbability> out;
  for (auto& [key, prob] : dist) out.push_back({key, prob});
  return out;
}

} // namespace glik
