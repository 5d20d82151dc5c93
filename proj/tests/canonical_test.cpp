#include <random>
#include <set>

#include <gtest/gtest.h>

#include "glik/canonical.hpp"
#include "glik/errors.hpp"
#include "oracles.hpp"

namespace glik {
namespace {

using testing::brute_force_automorphisms;
using testing::brute_force_isomorphic;
using testing::labeled_count;
using testing::labeled_graph;

TEST(CanonicalKey, Examples) {
  EXPECT_NE(canonical_key(make_family({Family::cycle, 4, 0})),
            canonical_key(make_family({Family::matching, 4, 2})));
  EXPECT_EQ(canonical_key(Graph(3, {{0, 1}, {1, 2}})), canonical_key(Graph(3, {{1, 0}, {0, 2}})));
}

TEST(CanonicalKey, KeyIsGraph6OfAnIsomorphicGraph) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
    const CanonicalKey key = canonical_key(g);
    EXPECT_EQ(key.order(), g.order());
    EXPECT_TRUE(brute_force_isomorphic(g, parse_graph6(key.graph6())));
    EXPECT_EQ(canonical_graph(g), parse_graph6(key.graph6()));
  }
}

// Classes among all 64 labeled graphs on 4 vertices, grouped by brute-force
// pairwise isomorphism.
TEST(CanonicalKey, ElevenClassesOnFourVerticesByBruteForce) {
  std::vector<Graph> reps;
  for (std::uint64_t c = 0; c < labeled_count(4); ++c) {
    const Graph g = labeled_graph(4, c);
    const bool known = std::any_of(reps.begin(), reps.end(),
                                   [&](const Graph& r) { return brute_force_isomorphic(g, r); });
    if (!known) reps.push_back(g);
  }
  ASSERT_EQ(reps.size(), 11U);

  std::set<CanonicalKey> keys;
  for (std::uint64_t c = 0; c < labeled_count(4); ++c) keys.insert(canonical_key(labeled_graph(4, c)));
  EXPECT_EQ(keys.size(), 11U);
}

TEST(CanonicalKey, RelabelingInvariance) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int t = 1 + static_cast<int>(rng() % 16);
    const Graph g = testing::random_graph(t, (rng() % 100) / 100.0, rng);
    const auto perm = testing::random_permutation(t, rng);
    EXPECT_EQ(canonical_key(relabel(g, perm)), canonical_key(g));
  }
}

TEST(CanonicalKey, SymmetricGraphsAtTheLimit) {
  const Graph k16 = make_family({Family::complete, 16, 0});
  EXPECT_EQ(canonical_key(k16).graph6(), to_graph6(k16));
  EXPECT_EQ(automorphism_count(k16), factorial(16));
  EXPECT_EQ(automorphism_count(Graph(16)), factorial(16));

  std::vector<Edge> two_k8;
  for (int base : {0, 8})
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v) two_k8.emplace_back(base + u, base + v);
  EXPECT_EQ(automorphism_count(Graph(16, two_k8)), factorial(8) * factorial(8) * 2);
  EXPECT_EQ(automorphism_count(make_family({Family::cycle, 16, 0})), 32);
  EXPECT_THROW(canonical_key(Graph(17)), LimitExceeded);
  EXPECT_NO_THROW(canonical_key(Graph(17), Limits{.canonical = 17}));
}

TEST(AreIsomorphic, Examples) {
  EXPECT_TRUE(are_isomorphic(make_family({Family::complete, 3, 0}),
                             make_family({Family::cycle, 3, 0})));
  EXPECT_FALSE(are_isomorphic(make_family({Family::cycle, 4, 0}),
                              make_family({Family::star, 4, 0})));
  const Graph p4 = make_family({Family::path, 4, 0});
  EXPECT_TRUE(are_isomorphic(p4, complement(p4)));
  EXPECT_FALSE(are_isomorphic(Graph(3), Graph(4)));
}

TEST(AreIsomorphic, AgreesWithBruteForceOnAllPairsUpToFour) {
  for (int t = 1; t <= 4; ++t) {
    for (std::uint64_t a = 0; a < labeled_count(t); ++a) {
      for (std::uint64_t b = 0; b < labeled_count(t); ++b) {
        const Graph g = labeled_graph(t, a);
        const Graph h = labeled_graph(t, b);
        ASSERT_EQ(are_isomorphic(g, h), brute_force_isomorphic(g, h)) << t << " " << a << " " << b;
      }
    }
  }
}

// For t = 5, 6 every class is paired with relabelings of itself and with
// every other class of the same edge count.
TEST(AreIsomorphic, AgreesWithBruteForceOnClassPairsFiveAndSix) {
  std::mt19937_64 rng(9);
  for (int t = 5; t <= 6; ++t) {
    const auto classes = enumerate_nonisomorphic(t);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Graph moved = relabel(classes[i], testing::random_permutation(t, rng));
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (classes[i].edge_count() != classes[j].edge_count()) continue;
        ASSERT_EQ(are_isomorphic(moved, classes[j]), brute_force_isomorphic(moved, classes[j]));
        ASSERT_EQ(are_isomorphic(moved, classes[j]), i == j);
      }
    }
  }
}

TEST(AutomorphismCount, Examples) {
  EXPECT_EQ(automorphism_count(make_family({Family::complete, 4, 0})), 24);
  EXPECT_EQ(automorphism_count(Graph(3, {{0, 1}, {1, 2}})), 2);
  // 120, from the degree-pruned search over S_10 below
  EXPECT_EQ(brute_force_automorphisms(petersen_graph()), 120U);
  EXPECT_EQ(automorphism_count(petersen_graph()), 120);
}

TEST(AutomorphismCount, MatchesBruteForceOnAllLabeledGraphsUpToFive) {
  for (int t = 1; t <= 5; ++t) {
    for (std::uint64_t c = 0; c < labeled_count(t); ++c) {
      const Graph g = labeled_graph(t, c);
      ASSERT_EQ(automorphism_count(g), BigInt(static_cast<unsigned long>(brute_force_automorphisms(g))))
          << to_graph6(g);
    }
  }
}

TEST(AutomorphismCount, MatchesBruteForceOnRandomGraphsUpToNine) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const int t = 6 + static_cast<int>(rng() % 4);
    const Graph g = testing::random_graph(t, (rng() % 100) / 100.0, rng);
    ASSERT_EQ(automorphism_count(g), BigInt(static_cast<unsigned long>(brute_force_automorphisms(g))))
        << to_graph6(g);
  }
}

TEST(AutomorphismCount, DividesFactorialAndIsComplementInvariant) {
  for (int t = 1; t <= 7; ++t) {
    for (const Graph& g : enumerate_nonisomorphic(t)) {
      const BigInt aut = automorphism_count(g);
      EXPECT_GE(aut, 1);
      EXPECT_TRUE(mpz_divisible_p(factorial(t).get_mpz_t(), aut.get_mpz_t()));
      EXPECT_EQ(aut, automorphism_count(complement(g)));
    }
  }
}

TEST(EnumerateNonisomorphic, CountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int t = 1; t <= 7; ++t) {
    EXPECT_EQ(enumerate_nonisomorphic(t).size(), expected[t - 1]) << t;
  }
  EXPECT_THROW(enumerate_nonisomorphic(8), LimitExceeded);
}

// Dedup of every labeled graph on five vertices gives the same 34 classes.
TEST(EnumerateNonisomorphic, MatchesLabeledDedupAtFive) {
  std::set<CanonicalKey> dedup;
  for (std::uint64_t c = 0; c < labeled_count(5); ++c) dedup.insert(canonical_key(labeled_graph(5, c)));
  std::set<CanonicalKey> listed;
  for (const Graph& g : enumerate_nonisomorphic(5)) listed.insert(canonical_key(g));
  EXPECT_EQ(dedup.size(), 34U);
  EXPECT_EQ(dedup, listed);
}

} // namespace
} // namespace glik
