#include "girthroot/recognition.hpp"

#include <algorithm>

#include "girthroot/balls.hpp"
#include "girthroot/leafless_roots.hpp"
#include "girthroot/tree_roots.hpp"

namespace girthroot {

VertexSet noncore_filter(const Graph& g) {
  BallFamily f(g);
  VertexSet out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (f[v].size() >= f[u].size() && is_subset(f[u], f[v])) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

namespace {

VertexSet peel_core(const Graph& g) {
  VertexSet alive(g.vertex_count());
  for (Vertex v = 0; v < alive.size(); ++v) alive[v] = v;
  while (!alive.empty()) {
    auto sub = induced_subgraph(g, alive);
    auto drop = noncore_filter(sub.graph);
    if (drop.empty()) break;
    VertexSet next;
    std::size_t k = 0;
    for (Vertex i = 0; i < alive.size(); ++i) {
      if (k < drop.size() && drop[k] == i) {
        ++k;
        continue;
      }
      next.push_back(alive[i]);
    }
    alive = std::move(next);
  }
  return alive;
}

std::uint32_t local_id(const VertexSet& core, Vertex v) {
  auto it = std::lower_bound(core.begin(), core.end(), v);
  if (it == core.end() || *it != v) return kUnreachable;
  return static_cast<std::uint32_t>(it - core.begin());
}

}  // namespace

VertexSet core_vertices(const Graph& g, std::uint32_t) {
  auto core = peel_core(g);
  if (core.empty()) throw AssignmentError("ball-containment peeling leaves no core vertices");
  return core;
}

CoreDecomposition link_depth_assignment(const Graph& g, std::uint32_t r, const VertexSet& core,
                                        const Graph& core_root) {
  const std::size_t n = g.vertex_count();
  if (core_root.vertex_count() != core.size()) {
    throw GraphError("core root must have one vertex per core vertex");
  }
  CoreDecomposition out;
  out.core = core;
  out.link.assign(n, kUnreachable);
  out.depth.assign(n, kDeepTail);
  for (Vertex i = 0; i < core.size(); ++i) {
    out.link[core[i]] = core[i];
    out.depth[core[i]] = 0;
  }

  BallFamily f(g);
  for (Vertex u = 0; u < n; ++u) {
    if (out.depth[u] == 0) continue;
    VertexSet local;
    for (Vertex w : f[u]) {
      if (auto id = local_id(core, w); id != kUnreachable) local.push_back(id);
    }
    if (local.empty()) continue;
    auto sub = induced_subgraph(core_root, local);
    const std::size_t k = sub.graph.vertex_count();
    if (sub.graph.edge_count() + 1 != k || !is_connected(sub.graph)) {
      throw AssignmentError("core part of the ball of " + std::to_string(u) + " is not a tree");
    }
    std::uint32_t radius = kUnreachable;
    std::vector<Vertex> centers;
    for (Vertex c = 0; c < k; ++c) {
      auto d = bfs_distances(sub.graph, c);
      auto ecc = *std::max_element(d.begin(), d.end());
      if (ecc < radius) {
        radius = ecc;
        centers.clear();
      }
      if (ecc == radius) centers.push_back(c);
    }
    if (centers.size() != 1) {
      throw AssignmentError("core part of the ball of " + std::to_string(u) +
                            " has two centers");
    }
    if (radius >= r) {
      throw AssignmentError("vertex " + std::to_string(u) + " sees too much of the core");
    }
    out.link[u] = core[sub.to_parent[centers[0]]];
    out.depth[u] = r - radius;
  }

  // Vertices beyond depth r take the link of the depth-r vertices in their
  // component once core and shallow vertices are removed.
  VertexSet outer;
  for (Vertex u = 0; u < n; ++u) {
    if (out.depth[u] >= r) outer.push_back(u);
  }
  auto sub = induced_subgraph(g, outer);
  std::vector<bool> seen(outer.size(), false);
  for (Vertex s = 0; s < outer.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : sub.graph.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    Vertex link = kUnreachable;
    for (Vertex i : comp) {
      Vertex u = outer[i];
      if (out.depth[u] != r) continue;
      if (link != kUnreachable && out.link[u] != link) {
        throw AssignmentError("depth-" + std::to_string(r) +
                              " vertices of one component disagree on their link");
      }
      link = out.link[u];
    }
    bool has_deep = std::any_of(comp.begin(), comp.end(),
                                [&](Vertex i) { return out.depth[outer[i]] == kDeepTail; });
    if (!has_deep) continue;
    if (link == kUnreachable) {
      throw AssignmentError("component beyond depth " + std::to_string(r) +
                            " has no depth-r vertex");
    }
    for (Vertex i : comp) out.link[outer[i]] = link;
  }
  return out;
}

VertexSet depth_sets_closed_form(const Graph& g, std::uint32_t r, const VertexSet& core,
                                 const Graph& core_root, Vertex v, std::uint32_t d) {
  if (d < 1 || d > r) throw GraphError("depth must lie in 1..r");
  auto lv = local_id(core, v);
  if (lv == kUnreachable) throw GraphError("closed form needs a core vertex");
  BallFamily f(g);
  auto dist = bfs_distances(core_root, lv);
  VertexSet inside;
  bool first = true;
  VertexSet outside;
  for (Vertex a = 0; a < core.size(); ++a) {
    if (dist[a] <= r - d) {
      inside = first ? f[core[a]] : set_intersection(inside, f[core[a]]);
      first = false;
    } else {
      outside = set_union(outside, f[core[a]]);
    }
  }
  return set_difference(inside, outside);
}

RecognitionResult recognize(const Graph& g, std::uint32_t r, unsigned jobs) {
  if (r == 0) throw GraphError("power exponent must be at least 1");
  if (!is_connected(g)) throw GraphError("recognition requires a connected graph");
  RecognitionResult out;
  const std::size_t n = g.vertex_count();
  if (r == 1) {
    if (g.edge_count() + 1 == n) {
      out.tree = g;
    } else if (girth(g).at_least(5)) {
      out.roots.push_back(g);
    }
    return out;
  }
  if (auto t = tree_root(g, r)) {
    out.tree = std::move(*t.tree);
    return out;
  }

  VertexSet core = peel_core(g);
  if (core.size() < 2 * r + 3) return out;
  auto sub = induced_subgraph(g, core);
  auto candidates = all_leafless_roots(sub.graph, r, jobs);
  out.core_candidates = candidates.size();

  for (const auto& core_root : candidates.roots) {
    try {
      auto dec = link_depth_assignment(g, r, core, core_root);
      std::vector<Edge> edges;
      for (auto [a, b] : core_root.edges()) edges.emplace_back(core[a], core[b]);
      bool ok = true;
      for (Vertex v : core) {
        DepthPartition part;
        part.layers.assign(r, {});
        VertexSet members{v};
        for (Vertex u = 0; u < n; ++u) {
          if (dec.link[u] == v && u != v) members.push_back(u);
        }
        if (members.size() == 1) continue;
        std::sort(members.begin(), members.end());
        auto tv = induced_subgraph(g, members);
        part.anchor = local_id(members, v);
        for (Vertex i = 0; i < members.size(); ++i) {
          auto depth = dec.depth[members[i]];
          if (depth == 0) continue;
          if (depth == kDeepTail) {
            part.overflow.push_back(i);
          } else {
            part.layers[depth - 1].push_back(i);
          }
        }
        auto t = restricted_tree_root(tv.graph, r, part);
        if (!t) {
          ok = false;
          break;
        }
        for (auto [a, b] : t.tree->edges()) edges.emplace_back(members[a], members[b]);
      }
      if (!ok) continue;
      Graph h = Graph::from_edges(n, edges);
      if (is_connected(h) && girth(h).at_least(2 * r + 3) && graph_power(h, r) == g) {
        out.roots.push_back(std::move(h));
      }
    } catch (const AssignmentError&) {
      continue;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Graph& a, const Graph& b) {
    return canonical_edges(a) < canonical_edges(b);
  });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

}  // namespace girthroot
