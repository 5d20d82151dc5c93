#include "glik/monkey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "glik/errors.hpp"

namespace glik {

std::uint64_t SplitMix64::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("uniform(0) is empty");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

std::vector<Vertex> uniform_subset(SplitMix64& rng, int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidParameter("uniform_subset needs 0 <= k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int j = 0; j < k; ++j) {
    const auto r = j + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n - j)));
    std::swap(pool[j], pool[r]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Graph GrowthTrace::rebuild() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (Vertex u : steps[i].neighbors) edges.emplace_back(u, static_cast<Vertex>(i));
  }
  return Graph(static_cast<int>(steps.size()), edges);
}

std::string GrowthTrace::serialize() const {
  std::string out;
  for (const auto& s : steps) {
    out += std::to_string(s.degree) + ":";
    for (std::size_t j = 0; j < s.neighbors.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(s.neighbors[j]);
    }
    out += "\n";
  }
  return out;
}

Growth grow(int t, SplitMix64& rng) {
  if (t < 1 || t > kMaxOrder) throw InvalidParameter("growth needs 1 <= t <= 64");
  std::vector<VertexMask> rows(t, 0);
  GrowthTrace trace;
  trace.steps.reserve(t);
  for (int i = 1; i <= t; ++i) {
    const Vertex fresh = i - 1;
    const int k = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(i)));
    GrowthStep step{k, uniform_subset(rng, i - 1, k)};
    for (Vertex u : step.neighbors) {
      rows[u] |= VertexMask{1} << fresh;
      rows[fresh] |= VertexMask{1} << u;
    }
    trace.steps.push_back(std::move(step));
  }
  return {Graph::from_rows(std::move(rows)), std::move(trace)};
}

Growth grow(int t, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return grow(t, rng);
}

Estimate make_estimate(std::uint64_t hits, std::uint64_t samples) {
  Estimate e;
  e.hits = hits;
  e.samples = samples;
  if (samples > 0) {
    e.p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(samples));
  }
  return e;
}

namespace {

// Runs `samples` growths split into fixed streams, calling visit(graph) for
// each; workers own disjoint streams and merge through `merge`.
template <typename Local>
void for_each_sample(int t, std::uint64_t samples, std::uint64_t seed, unsigned threads,
                     const std::function<void(Local&, const Graph&)>& visit,
                     const std::function<void(Local&)>& merge) {
  const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, streams));
  const auto work = [&](unsigned w) {
    Local local{};
    for (std::uint64_t s = w; s < streams; s += workers) {
      SplitMix64 rng = SplitMix64::stream(seed, s);
      const std::uint64_t begin = s * kSamplesPerStream;
      const std::uint64_t end = std::min(samples, begin + kSamplesPerStream);
      for (std::uint64_t i = begin; i < end; ++i) visit(local, grow(t, rng).graph);
    }
    merge(local);
  };
  if (workers <= 1) {
    work(0);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
}

} // namespace

Estimate estimate_likelihood(const Graph& target, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads, const Limits& limits) {
  if (samples < 1) throw InvalidParameter("samples must be at least 1");
  const CanonicalKey want = canonical_key(target, limits);
  const std::vector<int> want_degrees = target.degree_sequence();
  const int want_edges = target.edge_count();
  std::mutex mu;
  std::uint64_t hits = 0;
  for_each_sample<std::uint64_t>(
      target.order(), samples, seed, threads,
      [&](std::uint64_t& local, const Graph& g) {
        if (g.edge_count() != want_edges || g.degree_sequence() != want_degrees) return;
        if (canonical_key(g, limits) == want) ++local;
      },
      [&](std::uint64_t& local) {
        std::lock_guard lock(mu);
        hits += local;
      });
  return make_estimate(hits, samples);
}

std::map<CanonicalKey, std::uint64_t> sample_distribution(int t, std::uint64_t samples,
                                                          std::uint64_t seed, unsigned threads,
                                                          const Limits& limits) {
  if (samples < 1) throw InvalidParameter("samples must be at least 1");
  using Counts = std::map<CanonicalKey, std::uint64_t>;
  std::mutex mu;
  Counts total;
  for_each_sample<Counts>(
      t, samples, seed, threads,
      [&](Counts& local, const Graph& g) { ++local[canonical_key(g, limits)]; },
      [&](Counts& local) {
        std::lock_guard lock(mu);
        for (const auto& [k, n] : local) total[k] += n;
      });
  return total;
}

} // namespace glik
