#include <gtest/gtest.h>

#include "girthroot/generators.hpp"
#include "girthroot/leafless_roots.hpp"
#include "oracles.hpp"

using namespace girthroot;

namespace {

std::vector<std::vector<Edge>> edge_sets(const std::vector<Graph>& gs) {
  std::vector<std::vector<Edge>> out;
  for (const auto& g : gs) out.push_back(canonical_edges(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ReconstructFromOneEdge, CyclePowers) {
  EXPECT_EQ(reconstruct_from_one_edge(graph_power(oracle::cycle(9), 3), {0, 1}, 3), oracle::cycle(9));
  EXPECT_EQ(reconstruct_from_one_edge(graph_power(oracle::cycle(11), 4), {0, 1}, 4), oracle::cycle(11));
}

TEST(ReconstructFromOneEdge, CompleteGraphCandidateFailsVerification) {
  Graph k8 = oracle::complete(8);
  Graph h = reconstruct_from_one_edge(k8, {0, 1}, 3);
  EXPECT_FALSE(verify_root(k8, h, 3));
}

TEST(ReconstructFromOneEdge, ForeignSeedDoesNotVerify) {
  Graph g = graph_power(oracle::cycle(9), 3);
  // 0 and 2 are not adjacent in the root.
  EXPECT_FALSE(verify_root(g, reconstruct_from_one_edge(g, {0, 2}, 3), 3));
}

TEST(VerifyRoot, Examples) {
  Graph g = graph_power(oracle::cycle(9), 3);
  EXPECT_TRUE(verify_root(g, oracle::cycle(9), 3));
  EXPECT_FALSE(verify_root(g, oracle::path(9), 3));
  EXPECT_FALSE(verify_root(oracle::complete(6), oracle::cycle(6), 2));
  EXPECT_FALSE(verify_root(g, oracle::cycle(8), 3));
}

TEST(AllLeaflessRoots, CycleNineCubed) {
  auto rs = all_leafless_roots(graph_power(oracle::cycle(9), 3), 3);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs.roots[0], oracle::cycle(9));
  EXPECT_EQ(rs.r, 3u);
  EXPECT_EQ(rs.girth_bound, 9u);
}

TEST(AllLeaflessRoots, CompleteGraphHasNone) {
  EXPECT_TRUE(all_leafless_roots(oracle::complete(6), 2).empty());
  EXPECT_TRUE(oracle::all_roots(oracle::complete(6), 2, 7, true).empty());
  EXPECT_TRUE(all_leafless_roots(oracle::complete(8), 3).empty());
}

TEST(AllLeaflessRoots, TreePowersHaveNone) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    auto n = 2 + static_cast<std::uint32_t>(uniform_below(rng, 30));
    Graph t = random_tree(n, rng);
    for (std::uint32_t r = 2; r <= 4; ++r) EXPECT_TRUE(all_leafless_roots(graph_power(t, r), r).empty());
  }
}

TEST(AllLeaflessRoots, DisconnectedInputHasNone) {
  Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_TRUE(all_leafless_roots(g, 2).empty());
}

TEST(AllLeaflessRoots, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(31);
  int powers = 0;
  for (int it = 0; it < 36; ++it) {
    Graph g;
    const std::uint32_t r = 2;
    if (it % 3 == 0) {
      g = graph_power(oracle::cycle(7 + static_cast<std::uint32_t>(uniform_below(rng, 3))), r);
    } else {
      auto n = 5 + static_cast<std::uint32_t>(uniform_below(rng, 4));
      Graph t = random_tree(n, rng);
      auto e = t.edges();
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n && e.size() < 16; ++v)
          if (!t.has_edge(u, v) && uniform_unit(rng) < 0.3) e.emplace_back(u, v);
      g = Graph::from_edges(n, e);
    }
    if (g.edge_count() > 18) continue;
    auto expect = oracle::all_roots(g, r, 2 * r + 3, true);
    auto got = all_leafless_roots(g, r).roots;
    EXPECT_EQ(edge_sets(got), edge_sets(expect));
    powers += !expect.empty();
  }
  EXPECT_GT(powers, 0);
}

TEST(AllLeaflessRoots, RoundTripOnGeneratedClass) {
  for (std::uint32_t r = 2; r <= 5; ++r) {
    GenConfig cfg;
    cfg.r = r;
    cfg.max_vertices = 45;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      cfg.seed = seed;
      Graph h = random_leafless_girth_graph(cfg);
      Graph g = graph_power(h, r);
      auto rs = all_leafless_roots(g, r);
      ASSERT_EQ(rs.size(), 1u) << "r=" << r << " seed=" << seed;
      EXPECT_EQ(canonical_edges(rs.roots[0]), canonical_edges(h));
      EXPECT_TRUE(verify_root(g, rs.roots[0], r));
    }
  }
}

TEST(AllLeaflessRoots, JobsDoNotChangeTheResult) {
  GenConfig cfg;
  cfg.r = 3;
  cfg.seed = 12;
  Graph g = graph_power(random_leafless_girth_graph(cfg), 3);
  auto one = all_leafless_roots(g, 3, 1).roots;
  auto four = all_leafless_roots(g, 3, 4).roots;
  EXPECT_EQ(edge_sets(one), edge_sets(four));
}

TEST(AllLeaflessRoots, CardinalityBoundedByMaxDegree) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 40; ++it) {
    auto n = 6 + static_cast<std::uint32_t>(uniform_below(rng, 6));
    Graph t = random_tree(n, rng);
    auto e = t.edges();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!t.has_edge(u, v) && uniform_unit(rng) < 0.5) e.emplace_back(u, v);
    Graph g = Graph::from_edges(n, e);
    auto rs = all_leafless_roots(g, 2);
    std::uint32_t delta = 0;
    for (Vertex v = 0; v < n; ++v) delta = std::max<std::uint32_t>(delta, g.degree(v));
    EXPECT_LE(rs.size(), delta);
    for (const auto& h : rs.roots) EXPECT_TRUE(verify_root(g, h, 2));
  }
}
