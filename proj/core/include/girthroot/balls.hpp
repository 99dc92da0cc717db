#pragma once

#include <vector>

#include "girthroot/graph.hpp"

namespace girthroot {

/// Closed neighbourhoods B_v = N_G(v) ∪ {v} of a fixed graph.
class BallFamily {
 public:
  BallFamily() = default;
  explicit BallFamily(const Graph& g);

  const VertexSet& operator[](Vertex v) const { return balls_[v]; }
  std::size_t size() const noexcept { return balls_.size(); }
  bool contains(Vertex center, Vertex u) const;

 private:
  std::vector<VertexSet> balls_;
};

BallFamily balls(const Graph& g);

VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_without(VertexSet a, Vertex v);

/// B_x ∩ B_y minus every B_v with v ∈ B_y \ B_x, minus x.
VertexSet s_set(const Graph& g, const BallFamily& f, Vertex x, Vertex y);
/// B_x ∩ B_y ∩ ⋃_{v ∈ S_{x,y}} B_v.
VertexSet p_set(const Graph& g, const BallFamily& f, Vertex x, Vertex y);
/// B_x ∩ B_y ∩ ⋂_{v ∈ P_{x,y}} B_v, minus x. An empty P leaves B_x ∩ B_y.
VertexSet n_set(const Graph& g, const BallFamily& f, Vertex x, Vertex y);

/// Sets 1..r of the partition read off a tail v_0..v_r; entry d-1 holds the
/// vertices at distance d from v_0 in any root.
using TailPartition = std::vector<VertexSet>;

/// Requires B_{v_r} = {v_0..v_r} and B_{v_{i+1}} ⊊ B_{v_i}; throws GraphError
/// naming the first violated condition.
TailPartition tail_neighborhoods(const Graph& g, const BallFamily& f,
                                 const std::vector<Vertex>& tail);

}  // namespace girthroot
