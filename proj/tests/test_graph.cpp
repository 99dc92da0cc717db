#include <gtest/gtest.h>

#include <random>

#include "girthroot/generators.hpp"
#include "girthroot/graph.hpp"
#include "girthroot/io.hpp"
#include "oracles.hpp"

using namespace girthroot;

namespace {

Graph random_connected(std::uint32_t n, double p, std::mt19937_64& rng) {
  Graph t = random_tree(n, rng);
  auto e = t.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v) && uniform_unit(rng) < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph pendant(const Graph& g, Vertex at) {
  return oracle::with_edges(g, 1, {{at, static_cast<Vertex>(g.vertex_count())}});
}

}  // namespace

TEST(ParseEdgeList, AssignsIdsInFirstAppearanceOrder) {
  auto p = parse_edge_list("a b\nb c");
  EXPECT_EQ(p.graph.vertex_count(), 3u);
  EXPECT_EQ(canonical_edges(p.graph), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(p.labels.label(2), "c");
  EXPECT_EQ(*p.labels.find("b"), 1u);
}

TEST(ParseEdgeList, RejectsSelfLoop) { EXPECT_THROW(parse_edge_list("a a"), GraphError); }

TEST(ParseEdgeList, RejectsDuplicateEdge) {
  EXPECT_THROW(parse_edge_list("0 1\n0 1"), GraphError);
  EXPECT_THROW(parse_edge_list("0 1\n1 0"), GraphError);
}

TEST(ParseEdgeList, CommentsAndIsolatedVertices) {
  auto p = parse_edge_list("# header\nx\ny z\n");
  EXPECT_EQ(p.graph.vertex_count(), 3u);
  EXPECT_EQ(p.graph.degree(0), 0u);
  EXPECT_TRUE(p.graph.has_edge(1, 2));
}

TEST(GraphType, FromEdgesValidates) {
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{1, 1}}), GraphError);
  Graph g = Graph::from_edges(3, std::vector<Edge>{{2, 0}});
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphPower, PathSquaredIsTriangle) {
  EXPECT_EQ(graph_power(oracle::path(3), 2), oracle::complete(3));
}

TEST(GraphPower, FirstPowerIsIdentity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Graph h = random_connected(8, 0.2, rng);
    EXPECT_EQ(graph_power(h, 1), h);
  }
}

TEST(GraphPower, CycleNineCubedIsCirculant) {
  Graph p = graph_power(oracle::cycle(9), 3);
  for (Vertex i = 0; i < 9; ++i)
    for (Vertex j = 0; j < 9; ++j) {
      if (i == j) continue;
      std::uint32_t d = (j + 9 - i) % 9;
      bool near = d <= 3 || d >= 6;
      EXPECT_EQ(p.has_edge(i, j), near) << i << "," << j;
    }
  EXPECT_EQ(p, oracle::power(oracle::cycle(9), 3));
}

TEST(GraphPower, RejectsDisconnectedAndZero) {
  Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_THROW(graph_power(two, 2), GraphError);
  EXPECT_THROW(graph_power(oracle::path(3), 0), GraphError);
  EXPECT_EQ(graph_power_unchecked(two, 2), two);
}

TEST(GraphPower, MatchesFloydOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto n = 2 + static_cast<std::uint32_t>(uniform_below(rng, 12));
    Graph h = random_connected(n, 0.15, rng);
    for (std::uint32_t r = 1; r <= 4; ++r) {
      Graph p = graph_power(h, r);
      EXPECT_EQ(p, oracle::power(h, r));
      for (auto [u, v] : h.edges()) EXPECT_TRUE(p.has_edge(u, v));
    }
    EXPECT_EQ(graph_power(h, std::max<std::uint32_t>(1, diameter(h))), oracle::complete(n));
  }
}

TEST(Girth, Basics) {
  EXPECT_EQ(girth(oracle::cycle(5)), Girth::of_length(5));
  EXPECT_TRUE(girth(oracle::star(5)).is_acyclic());
  EXPECT_TRUE(girth(oracle::path(1)).is_acyclic());
  EXPECT_EQ(girth(oracle::complete(4)).length(), 3u);
}

TEST(Girth, AcyclicSortsAboveEveryLength) {
  EXPECT_GT(Girth::acyclic(), Girth::of_length(1000000));
  EXPECT_LT(Girth::of_length(3), Girth::of_length(4));
  EXPECT_TRUE(Girth::acyclic().at_least(99));
  EXPECT_EQ(Girth::acyclic().to_string(), "acyclic");
  EXPECT_THROW((void)Girth::acyclic().length(), std::logic_error);
}

TEST(Girth, MatchesDetourOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    auto n = 3 + static_cast<std::uint32_t>(uniform_below(rng, 10));
    Graph h = random_connected(n, uniform_unit(rng) * 0.3, rng);
    auto expect = oracle::girth(h);
    auto got = girth(h);
    if (expect == 0) {
      EXPECT_TRUE(got.is_acyclic());
    } else {
      ASSERT_FALSE(got.is_acyclic());
      EXPECT_EQ(got.length(), expect);
    }
  }
}

TEST(IsInClass, Examples) {
  EXPECT_TRUE(is_in_class(oracle::cycle(9), 9, true));
  EXPECT_FALSE(is_in_class(oracle::cycle(8), 9, true));
  EXPECT_TRUE(is_in_class(oracle::star(5), 7, false));
  EXPECT_FALSE(is_in_class(oracle::star(5), 7, true));
}

TEST(CoreOf, PeelsPendant) {
  auto c = core_of(pendant(oracle::cycle(9), 0));
  EXPECT_EQ(c.graph, oracle::cycle(9));
  EXPECT_EQ(c.to_parent, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(CoreOf, LeaflessIsFixed) {
  EXPECT_EQ(core_of(oracle::cycle(9)).graph, oracle::cycle(9));
  // Two triangles joined by a path of length 3.
  Graph g = Graph::from_edges(
      8, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  EXPECT_EQ(core_of(g).graph, g);
}

TEST(CoreOf, RejectsTrees) {
  EXPECT_THROW(core_of(oracle::path(5)), GraphError);
  EXPECT_THROW(core_of(Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})),
               GraphError);
}

TEST(CoreOf, IdempotentWithMinDegreeTwo) {
  GenConfig cfg;
  cfg.r = 2;
  cfg.attach_probability = 0.4;
  for (std::uint64_t s = 1; s <= 15; ++s) {
    cfg.seed = s;
    Graph core = random_leafless_girth_graph(cfg);
    Graph g = attach_random_trees(core, cfg);
    auto c = core_of(g);
    EXPECT_GE(min_degree(c.graph), 2u);
    EXPECT_EQ(core_of(c.graph).graph, c.graph);
    EXPECT_EQ(c.graph, core);
  }
}

TEST(PeelLevels, Path) {
  EXPECT_EQ(peel_levels(oracle::path(5), 1), (VertexSet{1, 2, 3}));
  EXPECT_EQ(peel_levels(oracle::path(5), 2), (VertexSet{2}));
  EXPECT_EQ(peel_levels(oracle::path(5), 0), (VertexSet{0, 1, 2, 3, 4}));
}

TEST(PeelLevels, CycleWithPendant) {
  EXPECT_EQ(peel_levels(pendant(oracle::cycle(9), 0), 1), (VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(PeelLevels, Composes) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    Graph t = random_tree(12, rng);
    for (std::uint32_t a = 0; a <= 3; ++a)
      for (std::uint32_t b = 0; b <= 3; ++b) {
        auto first = peel_levels(t, a);
        auto sub = induced_subgraph(t, first);
        VertexSet then;
        for (Vertex v : peel_levels(sub.graph, b)) then.push_back(sub.to_parent[v]);
        std::sort(then.begin(), then.end());
        EXPECT_EQ(peel_levels(t, a + b), then);
      }
  }
}

TEST(CanonicalEdges, Examples) {
  EXPECT_EQ(canonical_edges(oracle::complete(3)), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(canonical_edges(Graph(4)).empty());
  Graph a = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  Graph b = Graph::from_edges(3, std::vector<Edge>{{1, 0}, {0, 2}});
  EXPECT_NE(canonical_edges(a), canonical_edges(b));
}

TEST(Serialization, RoundTrips) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    Graph h = random_connected(1 + static_cast<std::uint32_t>(uniform_below(rng, 9)), 0.3, rng);
    EXPECT_EQ(canonical_edges(parse_edge_list(to_edge_list(h)).graph), canonical_edges(h));
    EXPECT_EQ(graph_from_json(to_json(h)).graph, h);
    EXPECT_EQ(read_graph(to_json(h)).graph, h);
    EXPECT_EQ(read_graph(to_edge_list(h)).graph, h);
  }
}

TEST(Serialization, JsonShape) {
  EXPECT_EQ(to_json(oracle::path(3)), R"({"edges":[[0,1],[1,2]],"n":3})");
  auto p = parse_edge_list("x y\ny z");
  auto back = graph_from_json(to_json(p.graph, &p.labels));
  EXPECT_EQ(back.labels.label(0), "x");
  EXPECT_EQ(back.graph, p.graph);
  EXPECT_THROW(graph_from_json("{\"n\":2}"), GraphError);
  EXPECT_THROW(graph_from_json("[1,2"), GraphError);
}

TEST(Serialization, EdgeListKeepsIdsWhenOrderPermutes) {
  Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 3}, {1, 2}});
  EXPECT_EQ(parse_edge_list(to_edge_list(g)).graph, g);
}

TEST(Serialization, DotHasLabels) {
  auto p = parse_edge_list("a b");
  auto dot = to_dot(p.graph, &p.labels);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}
