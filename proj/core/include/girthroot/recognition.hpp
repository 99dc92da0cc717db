#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "girthroot/graph.hpp"

namespace girthroot {

/// Depth marker for vertices farther than r from the core.
inline constexpr std::uint32_t kDeepTail = std::numeric_limits<std::uint32_t>::max();

/// Raised when a core candidate cannot be extended to a root.
class AssignmentError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Core vertices plus (link, depth) for every vertex of G. Core vertices link
/// to themselves at depth 0.
struct CoreDecomposition {
  VertexSet core;
  std::vector<Vertex> link;
  std::vector<std::uint32_t> depth;

  bool is_core(Vertex v) const { return depth[v] == 0; }
};

struct RecognitionResult {
  /// Present when G has a tree root; the non-tree branch is then skipped.
  std::optional<Graph> tree;
  /// Verified non-tree roots, at most one per core candidate.
  std::vector<Graph> roots;
  /// Leafless roots of the core power that were tried.
  std::size_t core_candidates = 0;

  bool yes() const noexcept { return tree.has_value() || !roots.empty(); }
};

/// All u with B_u ⊆ B_v for some v != u (closed balls in G).
VertexSet noncore_filter(const Graph& g);

/// Removes noncore_filter vertices round by round, recomputing balls in the
/// surviving induced subgraph. Throws AssignmentError if nothing survives.
VertexSet core_vertices(const Graph& g, std::uint32_t r);

/// `core_root` lives on the ids 0..|core|-1, vertex i standing for core[i].
/// Throws AssignmentError when the candidate is inconsistent with G.
CoreDecomposition link_depth_assignment(const Graph& g, std::uint32_t r, const VertexSet& core,
                                        const Graph& core_root);

/// ⋂ B_a over core a within r-d of v, minus ⋃ B_b over core b at least
/// r-d+1 away (distances in core_root). `v` is a parent id.
VertexSet depth_sets_closed_form(const Graph& g, std::uint32_t r, const VertexSet& core,
                                 const Graph& core_root, Vertex v, std::uint32_t d);

/// Roots of G with girth >= 2r+3: a tree root if one exists, otherwise one
/// root per core candidate that extends.
RecognitionResult recognize(const Graph& g, std::uint32_t r, unsigned jobs = 1);

}  // namespace girthroot
