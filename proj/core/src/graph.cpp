#include "girthroot/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace girthroot {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      auto it = std::adjacent_find(a.begin(), a.end());
      throw GraphError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*it) + ")");
    }
  }
  g.edges_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Girth Girth::of_length(std::uint32_t length) {
  if (length < 3) throw GraphError("girth must be at least 3");
  Girth g;
  g.length_ = length;
  return g;
}

std::uint32_t Girth::length() const {
  if (!length_) throw GraphError("acyclic graph has no finite girth");
  return *length_;
}

std::strong_ordering Girth::operator<=>(const Girth& other) const noexcept {
  if (!length_ || !other.length_) return !length_ <=> !other.length_;
  return *length_ <=> *other.length_;
}

std::string Girth::to_string() const { return length_ ? std::to_string(*length_) : "acyclic"; }

VertexLabeling VertexLabeling::identity(std::size_t n) {
  VertexLabeling l;
  for (std::size_t i = 0; i < n; ++i) l.intern(std::to_string(i));
  return l;
}

Vertex VertexLabeling::intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<Vertex>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<Vertex> VertexLabeling::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph out;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() > 2) {
      throw GraphError("line " + std::to_string(lineno) + ": expected at most two labels");
    }
    Vertex u = out.labels.intern(tok[0]);
    if (tok.size() == 1) continue;
    Vertex v = out.labels.intern(tok[1]);
    if (u == v) throw GraphError("line " + std::to_string(lineno) + ": self-loop at " + tok[0]);
    edges.emplace_back(u, v);
  }
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source, std::uint32_t limit) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] >= limit) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (auto d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw GraphError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

Graph graph_power_unchecked(const Graph& h, std::uint32_t r) {
  if (r == 0) throw GraphError("power exponent must be at least 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    auto d = bfs_distances(h, u, r);
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      if (d[v] <= r) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(h.vertex_count(), edges);
}

Graph graph_power(const Graph& h, std::uint32_t r) {
  if (!is_connected(h)) throw GraphError("graph power requires a connected graph");
  return graph_power_unchecked(h, r);
}

Girth girth(const Graph& g) {
  std::uint32_t best = kUnreachable;
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<Vertex> parent(g.vertex_count());
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, s);
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kUnreachable ? Girth::acyclic() : Girth::of_length(best);
}

std::uint32_t min_degree(const Graph& g) {
  std::size_t best = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return static_cast<std::uint32_t>(best);
}

bool is_in_class(const Graph& g, std::uint32_t g_min, bool leafless) {
  if (leafless && min_degree(g) < 2) return false;
  return girth(g).at_least(g_min);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
  std::vector<Vertex> local(g.vertex_count(), kUnreachable);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      if (local[w] != kUnreachable && i < local[w]) edges.emplace_back(i, local[w]);
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

namespace {

std::vector<bool> peel(const Graph& h, std::uint32_t steps) {
  std::vector<bool> alive(h.vertex_count(), true);
  std::vector<std::size_t> deg(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) deg[v] = h.degree(v);
  for (std::uint32_t s = 0; s < steps; ++s) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (alive[v] && deg[v] == 1) leaves.push_back(v);
    }
    if (leaves.empty()) break;
    for (Vertex v : leaves) alive[v] = false;
    for (Vertex v : leaves) {
      for (Vertex w : h.neighbors(v)) --deg[w];
    }
  }
  return alive;
}

}  // namespace

InducedSubgraph core_of(const Graph& h) {
  if (!is_connected(h)) throw GraphError("core of a disconnected graph");
  if (h.edge_count() + 1 == h.vertex_count()) throw GraphError("core of a tree is undefined");
  auto alive = peel(h, static_cast<std::uint32_t>(h.vertex_count()));
  VertexSet keep;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return induced_subgraph(h, keep);
}

VertexSet peel_levels(const Graph& h, std::uint32_t steps) {
  auto alive = peel(h, steps);
  VertexSet keep;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return keep;
}

std::vector<Edge> canonical_edges(const Graph& g) { return g.edges(); }

}  // namespace girthroot
