#pragma once

#include <vector>

#include "girthroot/balls.hpp"
#include "girthroot/graph.hpp"

namespace girthroot {

/// Verified roots of G that are leafless with girth >= 2r+3.
struct RootSet {
  std::vector<Graph> roots;
  std::uint32_t r = 0;
  std::uint32_t girth_bound = 0;

  bool empty() const noexcept { return roots.empty(); }
  std::size_t size() const noexcept { return roots.size(); }
};

/// Grows a candidate root from the seed edge e by repeatedly adding
/// x–z for z ∈ N_{x,y}. The candidate is not verified.
Graph reconstruct_from_one_edge(const Graph& g, const BallFamily& f, Edge e);
Graph reconstruct_from_one_edge(const Graph& g, Edge e, std::uint32_t r);

/// H^r = G and H is leafless with girth >= 2r+3.
bool verify_root(const Graph& g, const Graph& h, std::uint32_t r);

/// Every root in the class, sorted by canonical edges. `jobs` > 1 tries seed
/// edges on worker threads; the result does not depend on it.
RootSet all_leafless_roots(const Graph& g, std::uint32_t r, unsigned jobs = 1);

}  // namespace girthroot
