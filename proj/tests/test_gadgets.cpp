#include <gtest/gtest.h>

#include <set>

#include "girthroot/gadgets.hpp"
#include "girthroot/generators.hpp"
#include "oracles.hpp"

using namespace girthroot;

namespace {

H2CInstance sample() { return parse_h2c("4 3\n1 2\n1 3 4\n2 4\n"); }

std::vector<Color> abba() { return {Color::A, Color::B, Color::B, Color::A}; }

Vertex at(const LabeledGadget& g, std::string_view role) {
  auto v = g.find(role);
  if (!v) throw std::runtime_error("missing role " + std::string(role));
  return *v;
}

// Valid colourable instances with every element in some subset.
std::vector<std::pair<H2CInstance, Coloring>> colourable(int count) {
  std::vector<std::pair<H2CInstance, Coloring>> out;
  GenConfig cfg;
  cfg.h2c_elements = 5;
  cfg.h2c_subsets = 3;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    cfg.seed = seed;
    auto inst = random_h2c_instance(cfg);
    std::vector<bool> used(inst.n);
    for (const auto& s : inst.subsets)
      for (auto e : s) used[e] = true;
    if (std::find(used.begin(), used.end(), false) != used.end()) continue;
    if (auto c = h2c_bruteforce(inst)) out.emplace_back(inst, *c);
  }
  return out;
}

}  // namespace

TEST(H2C, ParseAndFormat) {
  auto inst = sample();
  EXPECT_EQ(inst.n, 4u);
  ASSERT_EQ(inst.subsets.size(), 3u);
  EXPECT_EQ(inst.subsets[1], (std::vector<std::uint32_t>{0, 2, 3}));
  EXPECT_EQ(parse_h2c(format_h2c(inst)).subsets, inst.subsets);
}

TEST(H2C, ParseErrors) {
  EXPECT_THROW(parse_h2c("2 1\n1 3\n"), GraphError);
  EXPECT_THROW(parse_h2c("2 1\n1 1\n"), GraphError);
  EXPECT_THROW(parse_h2c("2 2\n1 2\n"), GraphError);
  EXPECT_THROW(parse_h2c("2 x\n"), GraphError);
  EXPECT_THROW(parse_coloring(sample(), "ABB"), GraphError);
  EXPECT_THROW(parse_coloring(sample(), "ABCA"), GraphError);
}

TEST(H2C, Colourings) {
  auto c = parse_coloring(sample(), "ABBA");
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(format_coloring(c), "ABBA");
  EXPECT_FALSE(parse_coloring(sample(), "AAAA").valid);
}

TEST(H2C, Bruteforce) {
  auto c = h2c_bruteforce(sample());
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_valid_coloring(sample(), c->colors));
  EXPECT_FALSE(h2c_bruteforce(parse_h2c("3 2\n1 2\n3\n")));
  EXPECT_TRUE(h2c_bruteforce(parse_h2c("5 1\n1 2 3 4 5\n")));
  H2CInstance big;
  big.n = 21;
  big.subsets = {{0, 1}};
  EXPECT_THROW(h2c_bruteforce(big), GraphError);
}

TEST(BuildK, SampleInstanceVertexCounts) {
  EXPECT_EQ(build_K(sample(), 5).graph.vertex_count(), 36u);
  EXPECT_EQ(build_K(sample(), 4).graph.vertex_count(), 39u);
  for (std::uint32_t r = 2; r <= 9; ++r)
    EXPECT_EQ(build_K(sample(), r).graph.vertex_count(), gadget_vertex_count(sample(), r)) << "r=" << r;
}

TEST(BuildK, RolesAreTotalAndInjective) {
  for (std::uint32_t r = 2; r <= 7; ++r) {
    auto k = build_K(sample(), r);
    ASSERT_EQ(k.roles.size(), k.graph.vertex_count());
    std::set<std::string> seen(k.roles.begin(), k.roles.end());
    EXPECT_EQ(seen.size(), k.roles.size());
    EXPECT_EQ(k.find("A'").has_value(), r % 2 == 0);
    EXPECT_EQ(k.find("P_1^(1)").has_value(), r % 2 == 1 && r >= 5);
    EXPECT_FALSE(k.find("nope"));
  }
}

TEST(BuildK, DegenerateOddPaths) {
  auto k = build_K(sample(), 3);
  EXPECT_TRUE(k.graph.has_edge(at(k, "S_1"), at(k, "x_1")));
  EXPECT_FALSE(k.find("T_{1,1}^(1)"));
  auto five = build_K(sample(), 5);
  EXPECT_TRUE(five.graph.has_edge(at(five, "S_1"), at(five, "T_{1,1}^(1)")));
  EXPECT_TRUE(five.graph.has_edge(at(five, "T_{1,1}^(1)"), at(five, "x_1")));
}

TEST(BuildK, TailsArePaths) {
  for (std::uint32_t r = 2; r <= 6; ++r) {
    auto k = build_K(sample(), r);
    Vertex prev = at(k, "S_2");
    for (std::uint32_t l = 1; l <= r; ++l) {
      Vertex cur = at(k, "S_2^(" + std::to_string(l) + ")");
      EXPECT_TRUE(k.graph.has_edge(prev, cur));
      EXPECT_EQ(k.graph.degree(cur), l == r ? 1u : 2u);
      prev = cur;
    }
  }
}

TEST(BuildH, SampleInstanceGirth) {
  EXPECT_EQ(oracle::girth(build_H(sample(), 5, abba()).graph), 6u);
  EXPECT_EQ(oracle::girth(build_H(sample(), 4, abba()).graph), 6u);
}

TEST(BuildH, GirthByParity) {
  for (auto& [inst, c] : colourable(10))
    for (std::uint32_t r = 4; r <= 7; ++r) {
      auto h = build_H(inst, r, c.colors);
      EXPECT_EQ(oracle::girth(h.graph), r % 2 ? r + 1 : r + 2) << "r=" << r;
    }
}

TEST(BuildH, EvenCaseAttachesBothSides) {
  auto h = build_H(sample(), 4, abba());
  // x_1 is A: P_{1,A} hangs on A and P_{1,B} on B'.
  EXPECT_TRUE(h.graph.has_edge(at(h, "P_{1,A}^(1)"), at(h, "A")));
  EXPECT_TRUE(h.graph.has_edge(at(h, "P_{1,B}^(1)"), at(h, "B'")));
  EXPECT_TRUE(h.graph.has_edge(at(h, "P_{2,A}^(1)"), at(h, "A'")));
  EXPECT_TRUE(h.graph.has_edge(at(h, "P_{2,B}^(1)"), at(h, "B")));
}

TEST(BuildG, SampleInstanceEdges) {
  auto odd = build_G(sample(), 5);
  EXPECT_TRUE(odd.graph.has_edge(at(odd, "A"), at(odd, "S_1^(1)")));
  EXPECT_FALSE(odd.graph.has_edge(at(odd, "A"), at(odd, "S_1^(2)")));
  EXPECT_FALSE(odd.graph.has_edge(at(odd, "A"), at(odd, "B")));
  auto even = build_G(sample(), 4);
  EXPECT_FALSE(even.graph.has_edge(at(even, "A"), at(even, "S_1^(1)")));
  EXPECT_FALSE(even.graph.has_edge(at(even, "A"), at(even, "B")));
  EXPECT_TRUE(even.graph.has_edge(at(even, "A"), at(even, "B'")));
}

TEST(Reduction, SampleInstanceAllParities) {
  for (std::uint32_t r = 2; r <= 7; ++r) {
    EXPECT_TRUE(verify_reduction(sample(), r, abba())) << "r=" << r;
    EXPECT_EQ(oracle::power(build_H(sample(), r, abba()).graph, r), build_G(sample(), r).graph);
  }
}

TEST(Reduction, InvalidColouringIsANegativeControl) {
  std::vector<Color> all_a(4, Color::A);
  for (std::uint32_t r = 2; r <= 7; ++r) {
    EXPECT_THROW(verify_reduction(sample(), r, all_a), GraphError);
    EXPECT_FALSE(reduction_holds(sample(), r, all_a)) << "r=" << r;
  }
}

TEST(Reduction, RandomColourableInstances) {
  for (auto& [inst, c] : colourable(20))
    for (std::uint32_t r = 2; r <= 7; ++r) EXPECT_TRUE(verify_reduction(inst, r, c.colors)) << "r=" << r;
}

TEST(Reduction, PowerDoesNotDependOnTheColouring) {
  auto inst = parse_h2c("4 2\n1 2 3\n2 3 4\n");
  std::vector<std::vector<Color>> valid;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<Color> c;
    for (std::uint32_t i = 0; i < 4; ++i) c.push_back(mask >> i & 1 ? Color::B : Color::A);
    if (is_valid_coloring(inst, c)) valid.push_back(c);
  }
  ASSERT_GT(valid.size(), 2u);
  for (std::uint32_t r = 2; r <= 5; ++r) {
    auto first = graph_power(build_H(inst, r, valid[0]).graph, r);
    for (const auto& c : valid) EXPECT_EQ(graph_power(build_H(inst, r, c).graph, r), first);
  }
}

TEST(ExtractColoring, InvertsBuildH) {
  for (std::uint32_t r = 2; r <= 7; ++r) {
    auto c = extract_coloring(sample(), r, build_H(sample(), r, abba()).graph);
    EXPECT_EQ(format_coloring(c), "ABBA");
    EXPECT_TRUE(c.valid);
  }
  for (auto& [inst, c] : colourable(10))
    for (std::uint32_t r = 2; r <= 7; ++r)
      EXPECT_EQ(extract_coloring(inst, r, build_H(inst, r, c.colors).graph).colors, c.colors);
}

TEST(ExtractColoring, RejectsForeignGraphs) {
  EXPECT_THROW(extract_coloring(sample(), 5, oracle::path(4)), GraphError);
  // x_1 wired to both A and B.
  auto h = build_H(sample(), 3, abba());
  auto bad = oracle::with_edges(h.graph, 0, {{at(h, "x_1"), at(h, "B")}});
  EXPECT_THROW(extract_coloring(sample(), 3, bad), GraphError);
}

TEST(Gadgets, RejectsFirstPower) {
  EXPECT_THROW(build_K(sample(), 1), GraphError);
  EXPECT_THROW(build_G(sample(), 1), GraphError);
}
