#pragma once

#include <optional>
#include <vector>

#include "girthroot/graph.hpp"

namespace girthroot {

/// v together with T^(1)..T^(r) and T^(>r) partitions V(G). `layers[d-1]`
/// holds T^(d).
struct DepthPartition {
  Vertex anchor = 0;
  std::vector<VertexSet> layers;
  VertexSet overflow;
};

struct TreeRootResult {
  std::optional<Graph> tree;
  /// Set once T^r = G (and any depth constraint) has been rechecked.
  bool verified = false;

  explicit operator bool() const noexcept { return tree.has_value(); }
};

/// Some tree T with T^r = G, or none.
///
/// Exact search: edges forced in every root are fixed first, then partial
/// forests are merged one component at a time, pruning any merge that
/// would put a pair at tree distance <= r without being adjacent in G (or
/// the reverse). Distances inside a component never change afterwards, so
/// the pruning is sound.
TreeRootResult tree_root(const Graph& g, std::uint32_t r);

/// Every tree T with T^r = G by Prüfer enumeration; requires |V| <= 9.
std::vector<Graph> tree_root_bruteforce(const Graph& g, std::uint32_t r, unsigned jobs = 1);

/// Throws GraphError unless `part` partitions V(G) with r layers.
void validate_partition(const Graph& g, std::uint32_t r, const DepthPartition& part);

/// G plus two cliques w_1..w_r (ids n..n+r-1) and u_1..u_r (ids n+r..n+2r-1)
/// wired so that every tree root hangs them as paths at the anchor.
Graph build_restriction_gadget(const Graph& g, std::uint32_t r, const DepthPartition& part);

/// A tree root whose distance-d layer around the anchor is T^(d) for
/// d = 1..r, or none. Throws std::logic_error if the stripped gadget root
/// fails the direct check.
TreeRootResult restricted_tree_root(const Graph& g, std::uint32_t r, const DepthPartition& part);

/// T^r = G and T is a spanning tree.
bool verify_tree_root(const Graph& g, const Graph& t, std::uint32_t r);
/// Layer d of the anchor in t equals T^(d), and every other vertex is
/// farther than r.
bool satisfies_partition(const Graph& t, std::uint32_t r, const DepthPartition& part);

/// Maximum-cardinality-search chordality test.
bool is_chordal(const Graph& g);

}  // namespace girthroot
