#include "girthroot/leafless_roots.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace girthroot {

Graph reconstruct_from_one_edge(const Graph& g, const BallFamily& f, Edge e) {
  const std::size_t n = g.vertex_count();
  auto [x0, y0] = e;
  if (x0 >= n || y0 >= n || x0 == y0 || !f.contains(x0, y0)) {
    throw GraphError("seed edge must join two adjacent vertices of G");
  }
  std::vector<VertexSet> adj(n);
  auto link = [&](Vertex a, Vertex b) {
    auto it = std::lower_bound(adj[a].begin(), adj[a].end(), b);
    if (it != adj[a].end() && *it == b) return;
    adj[a].insert(it, b);
    adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
  };
  link(x0, y0);

  std::vector<bool> queued(n, false);
  std::vector<Vertex> queue{x0, y0};
  queued[x0] = queued[y0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    Vertex y = adj[x].front();
    for (Vertex z : n_set(g, f, x, y)) {
      link(x, z);
      if (!queued[z]) {
        queued[z] = true;
        queue.push_back(z);
      }
    }
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph reconstruct_from_one_edge(const Graph& g, Edge e, std::uint32_t) {
  return reconstruct_from_one_edge(g, BallFamily(g), e);
}

bool verify_root(const Graph& g, const Graph& h, std::uint32_t r) {
  if (r == 0 || g.vertex_count() != h.vertex_count()) return false;
  if (!is_connected(h) || !is_in_class(h, 2 * r + 3, true)) return false;
  return graph_power(h, r) == g;
}

RootSet all_leafless_roots(const Graph& g, std::uint32_t r, unsigned jobs) {
  RootSet out;
  out.r = r;
  out.girth_bound = 2 * r + 3;
  if (g.vertex_count() < 2 || !is_connected(g)) return out;

  BallFamily f(g);
  Vertex x = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (f[v].size() < f[x].size()) x = v;
  }
  VertexSet seeds = set_without(f[x], x);

  std::vector<std::optional<Graph>> found(seeds.size());
  auto attempt = [&](std::size_t i) {
    Graph h = reconstruct_from_one_edge(g, f, {x, seeds[i]});
    if (verify_root(g, h, r)) found[i] = std::move(h);
  };
  if (jobs <= 1 || seeds.size() < 2) {
    for (std::size_t i = 0; i < seeds.size(); ++i) attempt(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, seeds.size()); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < seeds.size();) attempt(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (auto& h : found) {
    if (h) out.roots.push_back(std::move(*h));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Graph& a, const Graph& b) {
    return canonical_edges(a) < canonical_edges(b);
  });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

}  // namespace girthroot
