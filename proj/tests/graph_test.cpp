#include <random>

#include <gtest/gtest.h>

#include "glik/canonical.hpp"
#include "glik/errors.hpp"
#include "glik/graph.hpp"
#include "oracles.hpp"

namespace glik {
namespace {

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidParameter);
  EXPECT_THROW(Graph(0), InvalidParameter);
  EXPECT_THROW(Graph::from_rows({0b10, 0b00}), InvalidParameter); // asymmetric
}

TEST(Graph, EdgesAreSortedPairs) {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degree_sequence(), (std::vector<int>{2, 2, 1, 1}));
}

TEST(MakeFamily, Examples) {
  EXPECT_EQ(make_family({Family::complete, 3, 0}).edge_count(), 3);
  EXPECT_EQ(make_family({Family::star, 4, 0}).degree_sequence(), (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(make_family({Family::matching, 4, 2}), Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(make_family({Family::cycle, 4, 0}), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(make_family({Family::one_edge, 5, 0}), Graph(5, {{0, 1}}));
  EXPECT_EQ(make_family({Family::empty, 3, 0}).edge_count(), 0);
  EXPECT_EQ(make_family({Family::path, 4, 0}).edges(),
            (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(MakeFamily, InvalidParameters) {
  EXPECT_THROW(make_family({Family::cycle, 2, 0}), InvalidParameter);
  EXPECT_THROW(make_family({Family::star, 1, 0}), InvalidParameter);
  EXPECT_THROW(make_family({Family::matching, 5, 3}), InvalidParameter);
  EXPECT_THROW(parse_family("wheel"), InvalidParameter);
  EXPECT_EQ(parse_family("matching-plus-isolates"), Family::matching);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(make_family({Family::complete, 4, 0})), Graph(4));
  EXPECT_EQ(complement(make_family({Family::cycle, 4, 0})), Graph(4, {{0, 2}, {1, 3}}));
  const Graph p4 = make_family({Family::path, 4, 0});
  EXPECT_TRUE(are_isomorphic(p4, complement(p4)));
}

TEST(Complement, IsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(InducedSubgraph, Examples) {
  const Graph c4 = make_family({Family::cycle, 4, 0});
  EXPECT_EQ(induced_subgraph(c4, std::vector<Vertex>{0, 1, 2}), Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(induced_subgraph(make_family({Family::complete, 4, 0}), std::vector<Vertex>{1, 3}),
            Graph(2, {{0, 1}}));
  EXPECT_EQ(induced_subgraph(make_family({Family::matching, 4, 2}), std::vector<Vertex>{0, 2}),
            Graph(2));
  // ascending-index relabeling regardless of the order given
  EXPECT_EQ(induced_subgraph(c4, std::vector<Vertex>{3, 0, 2}), Graph(3, {{0, 2}, {1, 2}}));
  EXPECT_THROW(induced_subgraph(c4, std::vector<Vertex>{0, 4}), InvalidParameter);
}

TEST(Graph6, Examples) {
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6("C~"), make_family({Family::complete, 4, 0}));
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph(2, {{0, 1}})), "A_");
  EXPECT_EQ(to_graph6(make_family({Family::complete, 4, 0})), "C~");
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), make_family({Family::complete, 4, 0}));
  // Petersen in the usual labeling has the well-known code "IheA@GUAo".
  EXPECT_EQ(to_graph6(parse_graph6("IheA@GUAo")).size(), 9U);
}

TEST(Graph6, MalformedInputReportsOffset) {
  const auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const MalformedInput& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of(""), 0U);
  EXPECT_EQ(offset_of("C"), 1U);        // truncated
  EXPECT_EQ(offset_of("C~~"), 2U);      // trailing byte
  EXPECT_EQ(offset_of("C\x7f"), 1U);    // out of range
  EXPECT_EQ(offset_of("A`"), 1U);       // nonzero padding
  EXPECT_EQ(offset_of("?"), 0U);        // order 0
  EXPECT_EQ(offset_of("~"), 0U);        // long form
}

TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const int t = 1 + static_cast<int>(rng() % 62);
    const Graph g = testing::random_graph(t, 0.3, rng);
    const std::string text = to_graph6(g);
    EXPECT_EQ(parse_graph6(text), g);
    EXPECT_EQ(to_graph6(parse_graph6(text)), text);
  }
  EXPECT_THROW(to_graph6(Graph(63)), LimitExceeded);
}

TEST(EdgeListJson, RoundTripAndErrors) {
  const Graph g(4, {{0, 1}, {1, 3}});
  EXPECT_EQ(to_edge_list_json(g), R"({"edges":[[0,1],[1,3]],"order":4})");
  EXPECT_EQ(parse_edge_list_json(to_edge_list_json(g)), g);
  EXPECT_EQ(parse_edge_list_json(R"({"order": 3, "edges": [[2, 0]]})"), Graph(3, {{0, 2}}));
  EXPECT_THROW(parse_edge_list_json("{"), MalformedInput);
  EXPECT_THROW(parse_edge_list_json(R"({"edges": []})"), MalformedInput);
  EXPECT_THROW(parse_edge_list_json(R"({"order": 2, "edges": [[0, 1], [1, 0]]})"),
               MalformedInput);
  EXPECT_THROW(parse_edge_list_json(R"({"order": 2, "edges": [[0, 2]]})"), MalformedInput);
}

TEST(Relabel, MovesEdges) {
  const Graph p3(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> perm{1, 0, 2};
  EXPECT_EQ(relabel(p3, perm), Graph(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(reorder(p3, std::vector<Vertex>{1, 0, 2}), Graph(3, {{0, 1}, {0, 2}}));
}

} // namespace
} // namespace glik
