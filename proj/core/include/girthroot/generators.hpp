#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "girthroot/gadgets.hpp"
#include "girthroot/graph.hpp"

namespace girthroot {

/// Seeded generation parameters. All randomness comes from std::mt19937_64
/// with bounded draws done by rejection, so streams are identical on every
/// platform.
struct GenConfig {
  std::uint64_t seed = 1;
  std::uint32_t r = 2;
  /// Girth target; 0 means 2r+3.
  std::uint32_t girth = 0;
  /// Core vertex budget: a target is drawn from [min_vertices, max_vertices]
  /// and ears are added until it is reached or no ear fits. Setting
  /// max_vertices to the girth yields the bare cycle.
  std::uint32_t min_vertices = 20;
  std::uint32_t max_vertices = 60;

  /// Per-core-vertex probability of growing a pendant tree.
  double attach_probability = 0.0;
  std::uint32_t max_tree_size = 4;
  std::uint32_t max_tree_depth = 3;
  /// Probability that a grown tree is forced to reach max_tree_depth.
  double deep_tail_probability = 0.0;

  std::uint32_t h2c_elements = 6;
  std::uint32_t h2c_subsets = 4;
  std::uint32_t h2c_min_subset = 2;
  std::uint32_t h2c_max_subset = 3;

  std::uint32_t girth_target() const { return girth ? girth : 2 * r + 3; }
};

/// Parses a JSON object whose keys mirror the GenConfig fields; missing keys
/// keep their defaults, unknown keys are rejected.
GenConfig gen_config_from_json(std::string_view text);
std::string gen_config_to_json(const GenConfig& cfg);

/// Portable draw in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Portable draw in [0, 1).
double uniform_unit(std::mt19937_64& rng);

/// Connected, leafless, girth >= cfg.girth_target(): a cycle plus random ears.
/// Throws GraphError when the budget cannot hold a single cycle.
Graph random_leafless_girth_graph(const GenConfig& cfg);

/// Glues random trees onto the vertices of h; vertices keep their ids and
/// new vertices follow. Uses the seed offset so it does not replay the core
/// stream.
Graph attach_random_trees(const Graph& h, const GenConfig& cfg);

/// Uniform random labelled tree on n vertices (random Prüfer sequence).
Graph random_tree(std::uint32_t n, std::mt19937_64& rng);

/// Every spanning connected subgraph H of G with H^r = G, girth(H) >= g_min
/// and, when leafless, min degree >= 2. Requires |E(G)| <= 18.
std::vector<Graph> bruteforce_all_roots(const Graph& g, std::uint32_t r, std::uint32_t g_min,
                                        bool leafless, unsigned jobs = 1);

H2CInstance random_h2c_instance(const GenConfig& cfg);

}  // namespace girthroot
