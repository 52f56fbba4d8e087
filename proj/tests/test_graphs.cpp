#include <random>

#include <gtest/gtest.h>

#include "detarr/graph.hpp"
#include "oracles.hpp"

namespace detarr {
namespace {

Graph tree5() { return Graph(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}}); }

TEST(GraphBasics, EdgeNormalisationAndErrors) {
  Graph g(4);
  g.add_edge(3, 1);
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 3}}));
  EXPECT_THROW(g.add_edge(1, 3), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
  EXPECT_THROW(g.add_edge(2, 5), std::out_of_range);
}

TEST(GraphBasics, ComponentsAndUnion) {
  const Graph g = Graph::path(2).disjoint_union(Graph(1)).disjoint_union(Graph::complete(3));
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.components(), (std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5, 6}}));
  EXPECT_TRUE(Graph::complete(4).is_complete());
  EXPECT_FALSE(Graph::cycle(4).is_complete());
}

TEST(Chordality, Examples) {
  const auto k4 = is_chordal(Graph::complete(4));
  ASSERT_TRUE(k4.chordal());
  EXPECT_TRUE(verify_elimination_order(Graph::complete(4), k4.order->order));

  const auto c4 = is_chordal(Graph::cycle(4));
  ASSERT_FALSE(c4.chordal());
  EXPECT_EQ(c4.witness, (std::vector<int>{1, 2, 3, 4}));

  EXPECT_TRUE(is_chordal(tree5()).chordal());
  EXPECT_TRUE(is_chordal(Graph(3)).chordal());
}

TEST(Chordality, VerifierRejectsBadOrders) {
  const Graph g = Graph::path(3);
  EXPECT_TRUE(verify_elimination_order(g, {1, 2, 3}));
  // 2 appears last: its earlier neighbours 1 and 3 are not adjacent.
  EXPECT_FALSE(verify_elimination_order(g, {1, 3, 2}));
  EXPECT_FALSE(verify_elimination_order(g, {1, 2}));
  EXPECT_FALSE(verify_elimination_order(g, {1, 1, 2}));
}

TEST(Chordality, ChordlessCycleChecker) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_TRUE(is_chordless_cycle(c5, {1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_chordless_cycle(c5, {1, 2, 3, 5}));
  EXPECT_FALSE(is_chordless_cycle(Graph::complete(4), {1, 2, 3, 4}));
  EXPECT_FALSE(is_chordless_cycle(Graph::complete(3), {1, 2, 3}));
}

TEST(LongestChordlessCycle, Examples) {
  EXPECT_EQ(longest_chordless_cycle(Graph::cycle(6)), 6);
  EXPECT_FALSE(longest_chordless_cycle(Graph::complete(5)).has_value());
  Graph g = Graph::cycle(5);
  g.add_edge(1, 3);
  EXPECT_EQ(longest_chordless_cycle(g), 4);
  EXPECT_EQ(*longest_chordless_cycle_vertices(g), (std::vector<int>{1, 3, 4, 5}));
}

TEST(LongestChordlessCycle, CyclesOfEveryLength) {
  for (int k = 4; k <= 10; ++k) EXPECT_EQ(longest_chordless_cycle(Graph::cycle(k)), k) << k;
}

TEST(LongestChordlessCycle, SizeGuard) {
  EXPECT_THROW(longest_chordless_cycle(Graph::cycle(13)), std::length_error);
  EXPECT_EQ(longest_chordless_cycle(Graph::cycle(13), 13), 13);
}

TEST(PdimBound, Examples) {
  EXPECT_EQ(pdim_lower_bound(Graph::cycle(4)), 1);
  EXPECT_EQ(pdim_lower_bound(Graph::cycle(7)), 4);
  EXPECT_FALSE(pdim_lower_bound(Graph::complete(6)).has_value());
}

TEST(BuildOrder, Examples) {
  EXPECT_EQ(chordal_build_order(Graph::complete(4)).earlier_degree, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(chordal_build_order(Graph::path(3)).earlier_degree, (std::vector<int>{0, 1, 1}));
  const BuildOrder two = chordal_build_order(Graph(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(two.order, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(two.earlier_degree, (std::vector<int>{0, 1, 0, 1}));
}

TEST(BuildOrder, NotChordalCarriesWitness) {
  try {
    chordal_build_order(Graph::cycle(5));
    FAIL() << "expected NotChordalError";
  } catch (const NotChordalError& e) {
    EXPECT_EQ(e.witness(), (std::vector<int>{1, 2, 3, 4, 5}));
  }
}

TEST(BuildOrder, ComponentsAreContiguousAndStartLow) {
  // Interleaved labels: components {1,4,6}, {2,5}, {3}.
  const Graph g(6, {{1, 4}, {4, 6}, {1, 6}, {2, 5}});
  const BuildOrder b = chordal_build_order(g);
  EXPECT_TRUE(verify_elimination_order(g, b.order));
  EXPECT_EQ(b.order.front(), 1);
  EXPECT_EQ(b.order[3], 2);
  EXPECT_EQ(b.order[5], 3);
  EXPECT_EQ(b.earlier_degree, (std::vector<int>{0, 1, 2, 0, 1, 0}));
}

// ---------------------------------------------------------------------------
// Oracle agreement.

void check_against_oracle(const Graph& g) {
  const ChordalityVerdict v = is_chordal(g);
  ASSERT_EQ(v.chordal(), testing::brute_force_chordal(g));
  if (v.chordal()) {
    ASSERT_TRUE(verify_elimination_order(g, v.order->order));
    const BuildOrder b = chordal_build_order(g);
    ASSERT_TRUE(verify_elimination_order(g, b.order));
  } else {
    ASSERT_TRUE(is_chordless_cycle(g, v.witness));
    ASSERT_EQ(v.witness.front(), *std::min_element(v.witness.begin(), v.witness.end()));
  }
}

TEST(ChordalityOracle, AllLabeledGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t masks = 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      const Graph g = testing::graph_from_mask(n, mask);
      check_against_oracle(g);
      if (HasFatalFailure()) return;
    }
  }
}

TEST(ChordalityOracle, RandomGraphsOnSevenAndEightVertices) {
  std::mt19937_64 rng(testing::kGraphSeed);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int trial = 0; trial < 240; ++trial) {
    const Graph g = testing::random_graph(rng, 7 + trial % 2, density(rng));
    check_against_oracle(g);
    if (HasFatalFailure()) return;
  }
}

TEST(ChordalityOracle, RandomChordalGraphsAreRecognised) {
  std::mt19937_64 rng(testing::kGraphSeed + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_chordal_graph(rng, 4 + trial % 6);
    ASSERT_TRUE(is_chordal(g).chordal());
  }
}

TEST(ChordalityOracle, LongestCycleMatchesEnumeration) {
  std::mt19937_64 rng(testing::kGraphSeed + 2);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(rng, 5 + trial % 4, 0.45);
    const int oracle = testing::brute_force_longest_chordless(g);
    const auto got = longest_chordless_cycle(g);
    ASSERT_EQ(got.value_or(0), oracle);
    if (got) ASSERT_TRUE(is_chordless_cycle(g, *longest_chordless_cycle_vertices(g)));
  }
}

// ---------------------------------------------------------------------------
// Text format.

TEST(GraphFormat, ParsesEdgesCommentsAndComplete) {
  const Graph g = parse_graph("# square\n4\n1 2\n2 3  # side\n3 4\n1 4\n\n");
  EXPECT_EQ(g, Graph::cycle(4));
  EXPECT_EQ(parse_graph("complete 5\n"), Graph::complete(5));
  EXPECT_EQ(parse_graph("3\n").edge_count(), 0u);
}

TEST(GraphFormat, ErrorsCarryLineNumbers) {
  const auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const GraphFormatError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("5\n1 2\n0 5\n"), 3);
  EXPECT_EQ(line_of("4\n2 1\n"), 2);
  EXPECT_EQ(line_of("4\n1 2\n1 2\n"), 3);
  EXPECT_EQ(line_of("4\n1 6\n"), 2);
  EXPECT_EQ(line_of("4\n1 2 3\n"), 2);
  EXPECT_EQ(line_of("four\n"), 1);
  EXPECT_EQ(line_of("# only a comment\n"), 1);
  EXPECT_EQ(line_of("complete 3\n1 2\n"), 2);
}

TEST(GraphFormat, MissingFile) {
  EXPECT_THROW(load_graph_file("/nonexistent/graph.txt"), GraphFormatError);
}

TEST(GraphFormat, CycleFormatting) {
  EXPECT_EQ(format_cycle({1, 2, 3, 4}), "(1,2,3,4)");
}

}  // namespace
}  // namespace detarr
