#include "girthroot/balls.hpp"

#include <algorithm>
#include <iterator>

namespace girthroot {

BallFamily::BallFamily(const Graph& g) : balls_(g.vertex_count()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    auto& b = balls_[v];
    b.reserve(nb.size() + 1);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    b.insert(b.end(), nb.begin(), it);
    b.push_back(v);
    b.insert(b.end(), it, nb.end());
  }
}

bool BallFamily::contains(Vertex center, Vertex u) const {
  const auto& b = balls_[center];
  return std::binary_search(b.begin(), b.end(), u);
}

BallFamily balls(const Graph& g) { return BallFamily(g); }

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_without(VertexSet a, Vertex v) {
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) a.erase(it);
  return a;
}

VertexSet s_set(const Graph&, const BallFamily& f, Vertex x, Vertex y) {
  VertexSet out = set_intersection(f[x], f[y]);
  for (Vertex v : set_difference(f[y], f[x])) {
    if (out.empty()) break;
    out = set_difference(out, f[v]);
  }
  return set_without(std::move(out), x);
}

VertexSet p_set(const Graph& g, const BallFamily& f, Vertex x, Vertex y) {
  VertexSet reach;
  for (Vertex v : s_set(g, f, x, y)) reach = set_union(reach, f[v]);
  return set_intersection(set_intersection(f[x], f[y]), reach);
}

VertexSet n_set(const Graph& g, const BallFamily& f, Vertex x, Vertex y) {
  VertexSet out = set_intersection(f[x], f[y]);
  for (Vertex v : p_set(g, f, x, y)) {
    if (out.empty()) break;
    out = set_intersection(out, f[v]);
  }
  return set_without(std::move(out), x);
}

TailPartition tail_neighborhoods(const Graph& g, const BallFamily& f,
                                 const std::vector<Vertex>& tail) {
  if (tail.size() < 2) throw GraphError("tail needs at least two vertices");
  for (Vertex v : tail) {
    if (v >= g.vertex_count()) throw GraphError("tail vertex out of range");
  }
  const std::size_t r = tail.size() - 1;
  VertexSet path(tail.begin(), tail.end());
  std::sort(path.begin(), path.end());
  if (std::adjacent_find(path.begin(), path.end()) != path.end()) {
    throw GraphError("tail repeats a vertex");
  }
  if (f[tail[r]] != path) {
    throw GraphError("tail hypothesis: ball of the last vertex is not the tail itself");
  }
  for (std::size_t i = 0; i < r; ++i) {
    const auto& inner = f[tail[i + 1]];
    const auto& outer = f[tail[i]];
    if (!is_subset(inner, outer) || inner.size() == outer.size()) {
      throw GraphError("tail hypothesis: ball of v_" + std::to_string(i + 1) +
                       " is not strictly inside ball of v_" + std::to_string(i));
    }
  }
  TailPartition out(r);
  for (std::size_t d = 1; d <= r; ++d) {
    out[d - 1] = set_difference(f[tail[r - d]], f[tail[r - d + 1]]);
    out[d - 1] = set_union(out[d - 1], VertexSet{tail[d]});
  }
  return out;
}

}  // namespace girthroot
