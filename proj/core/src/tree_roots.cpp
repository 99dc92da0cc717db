#include "girthroot/tree_roots.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "girthroot/balls.hpp"

namespace girthroot {

bool is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> visit_pos(n, n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (visit_pos[v] == n && (!have || weight[v] > weight[best])) {
        best = v;
        have = true;
      }
    }
    visit_pos[best] = step;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (visit_pos[w] == n) ++weight[w];
    }
  }
  for (Vertex v : order) {
    Vertex parent = v;
    std::size_t parent_pos = 0;
    bool have = false;
    for (Vertex w : g.neighbors(v)) {
      if (visit_pos[w] < visit_pos[v] && (!have || visit_pos[w] > parent_pos)) {
        parent = w;
        parent_pos = visit_pos[w];
        have = true;
      }
    }
    if (!have) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && visit_pos[w] < visit_pos[v] && !g.has_edge(w, parent)) return false;
    }
  }
  return true;
}

bool verify_tree_root(const Graph& g, const Graph& t, std::uint32_t r) {
  if (r == 0 || g.vertex_count() != t.vertex_count() || g.vertex_count() == 0) return false;
  if (t.edge_count() + 1 != t.vertex_count() || !is_connected(t)) return false;
  return graph_power(t, r) == g;
}

namespace {

// Partial forest with per-component distance tables; every mutation can be
// undone in LIFO order.
class ForestSearch {
 public:
  ForestSearch(const Graph& g, std::uint32_t r)
      : g_(g), r_(r), n_(g.vertex_count()), adj_(n_ * n_, 0), dist_(n_ * n_, kFar),
        comp_(n_), members_(n_) {
    for (auto [u, v] : g.edges()) adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    for (Vertex v = 0; v < n_; ++v) {
      comp_[v] = v;
      members_[v] = {v};
      dist_[v * n_ + v] = 0;
    }
    edges_ = g.edges();
    excluded_.assign(edges_.size(), false);
    banned_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_id_[key(edges_[i].first, edges_[i].second)] = i;
    BallFamily f(g);
    std::map<VertexSet, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n_; ++v) classes[f[v]].push_back(v);
    twins_.resize(n_);
    for (auto& [ball, vs] : classes) {
      for (Vertex v : vs) twins_[v] = vs;
    }
  }

  bool can_merge(Vertex a, Vertex b) const {
    const auto& left = members_[comp_[a]];
    const auto& right = members_[comp_[b]];
    for (Vertex u : left) {
      const std::uint32_t du = dist_[u * n_ + a] + 1;
      const std::uint8_t* row = &adj_[u * n_];
      const std::uint16_t* drow = &dist_[b * n_];
      for (Vertex w : right) {
        const bool near = du + drow[w] <= r_;
        if (near != static_cast<bool>(row[w])) return false;
      }
    }
    return true;
  }

  // Each outside vertex must meet the component in a ball of radius < r
  // around one of its members.
  bool shape_ok(Vertex c) const {
    const auto& mem = members_[c];
    if (mem.size() < 2) return true;
    std::vector<Vertex> seen;
    for (Vertex w = 0; w < n_; ++w) {
      if (comp_[w] == c) continue;
      seen.clear();
      for (Vertex a : mem) {
        if (adj_[w * n_ + a]) seen.push_back(a);
      }
      if (seen.empty()) continue;
      bool found = false;
      for (Vertex p : seen) {
        std::uint32_t rho = 0;
        for (Vertex a : seen) rho = std::max<std::uint32_t>(rho, dist_[p * n_ + a]);
        if (rho >= r_ || (rho + 1 == r_ && banned_[w * n_ + p])) continue;
        std::size_t inside = 0;
        for (Vertex a : mem) {
          if (dist_[p * n_ + a] <= rho) ++inside;
        }
        if (inside == seen.size()) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  void merge(Vertex a, Vertex b) {
    Vertex ca = comp_[a], cb = comp_[b];
    if (members_[ca].size() < members_[cb].size()) {
      std::swap(a, b);
      std::swap(ca, cb);
    }
    for (Vertex u : members_[ca]) {
      const std::uint16_t du = dist_[u * n_ + a] + 1;
      for (Vertex w : members_[cb]) {
        const std::uint16_t d = du + dist_[b * n_ + w];
        dist_[u * n_ + w] = dist_[w * n_ + u] = d;
      }
    }
    history_.push_back({ca, cb, members_[cb].size()});
    for (Vertex w : members_[cb]) {
      comp_[w] = ca;
      members_[ca].push_back(w);
    }
    tree_.emplace_back(std::min(a, b), std::max(a, b));
    ++merged_;
  }

  void undo_merge() {
    auto [ca, cb, count] = history_.back();
    history_.pop_back();
    auto& big = members_[ca];
    std::vector<Vertex> moved(big.end() - static_cast<std::ptrdiff_t>(count), big.end());
    big.resize(big.size() - count);
    for (Vertex w : moved) comp_[w] = cb;
    for (Vertex u : big) {
      for (Vertex w : moved) dist_[u * n_ + w] = dist_[w * n_ + u] = kFar;
    }
    tree_.pop_back();
    --merged_;
  }

  // Edges lying in every tree root: no third vertex's ball covers B_x ∩ B_y.
  bool apply_certain_edges() {
    BallFamily f(g_);
    for (auto [x, y] : edges_) {
      VertexSet common = set_intersection(f[x], f[y]);
      bool covered = false;
      for (Vertex z : common) {
        if (z != x && z != y && is_subset(common, f[z])) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      if (comp_[x] == comp_[y] || !can_merge(x, y)) return false;
      merge(x, y);
    }
    for (Vertex c = 0; c < n_; ++c) {
      if (comp_[c] == c && !shape_ok(c)) return false;
    }
    return true;
  }

  // Grows the largest component: picks the outside component with the
  // fewest admissible attachments to it, tries each, then rules all of them
  // out and picks again. A failed attachment is impossible for every
  // extension of the current state, so it stays excluded below this frame.
  bool solve() {
    if (merged_ + 1 == n_) return true;
    std::vector<std::size_t> excluded_here;
    std::vector<std::size_t> count(n_), options;
    bool ok = false;
    while (!ok) {
      std::fill(count.begin(), count.end(), 0);
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        if (excluded_[i] || comp_[a] == comp_[b] || !can_merge(a, b)) continue;
        ++count[comp_[a]];
        ++count[comp_[b]];
      }
      Vertex grow = kUnreachable;
      bool dead = false;
      for (Vertex c = 0; c < n_; ++c) {
        if (comp_[c] != c) continue;
        if (count[c] == 0) dead = true;
        if (grow == kUnreachable || members_[c].size() > members_[grow].size()) grow = c;
      }
      if (dead || !shape_ok(grow)) break;

      std::fill(count.begin(), count.end(), 0);
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        if (excluded_[i] || comp_[a] == comp_[b]) continue;
        if (comp_[a] != grow && comp_[b] != grow) continue;
        if (can_merge(a, b)) ++count[comp_[a] == grow ? comp_[b] : comp_[a]];
      }
      Vertex pick = kUnreachable;
      for (Vertex c = 0; c < n_; ++c) {
        if (comp_[c] == c && count[c] > 0 && (pick == kUnreachable || count[c] < count[pick])) pick = c;
      }
      if (pick == kUnreachable) break;
      options.clear();
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        if (excluded_[i]) continue;
        if (!((comp_[a] == grow && comp_[b] == pick) || (comp_[a] == pick && comp_[b] == grow))) continue;
        if (can_merge(a, b)) options.push_back(i);
      }
      for (std::size_t i : options) {
        if (excluded_[i]) continue;
        merge(edges_[i].first, edges_[i].second);
        ok = shape_ok(comp_[edges_[i].first]) && solve();
        if (ok) break;
        undo_merge();
        exclude(i, excluded_here);
        // Swapping two untouched twins is an automorphism fixing the state.
        auto [a, b] = edges_[i];
        for (int side = 0; side < 2; ++side, std::swap(a, b)) {
          if (members_[comp_[a]].size() != 1) continue;
          for (Vertex t : twins_[a]) {
            if (t == a || t == b || members_[comp_[t]].size() != 1) continue;
            auto it = edge_id_.find(key(t, b));
            if (it != edge_id_.end() && !excluded_[it->second]) exclude(it->second, excluded_here);
          }
        }
      }
    }
    for (std::size_t i : excluded_here) {
      excluded_[i] = false;
      banned_[edges_[i].first * n_ + edges_[i].second] = banned_[edges_[i].second * n_ + edges_[i].first] = 0;
    }
    return ok;
  }

  Graph tree() const { return Graph::from_edges(n_, tree_); }

 private:
  static constexpr std::uint16_t kFar = 0x7fff;
  struct Step {
    Vertex into;
    Vertex from;
    std::size_t count;
  };

  void exclude(std::size_t i, std::vector<std::size_t>& log) {
    excluded_[i] = true;
    banned_[edges_[i].first * n_ + edges_[i].second] = banned_[edges_[i].second * n_ + edges_[i].first] = 1;
    log.push_back(i);
  }

  static std::uint64_t key(Vertex a, Vertex b) {
    return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
  }

  const Graph& g_;
  std::uint32_t r_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint16_t> dist_;
  std::vector<Vertex> comp_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<Edge> edges_;
  std::vector<bool> excluded_;
  std::vector<std::uint8_t> banned_;
  std::unordered_map<std::uint64_t, std::size_t> edge_id_;
  std::vector<std::vector<Vertex>> twins_;
  std::vector<Step> history_;
  std::vector<Edge> tree_;
  std::size_t merged_ = 0;
};

TreeRootResult checked(const Graph& g, Graph t, std::uint32_t r) {
  if (!verify_tree_root(g, t, r)) {
    throw std::logic_error("tree root search produced a tree whose power differs from G");
  }
  return {std::move(t), true};
}

}  // namespace

TreeRootResult tree_root(const Graph& g, std::uint32_t r) {
  const std::size_t n = g.vertex_count();
  if (r == 0) throw GraphError("power exponent must be at least 1");
  if (n == 0 || !is_connected(g)) return {};
  if (n >= 0x7fff) throw GraphError("graph too large for the tree root search");
  if (r == 1) {
    if (g.edge_count() + 1 != n) return {};
    return checked(g, g, r);
  }
  if (g.edge_count() == n * (n - 1) / 2) {
    std::vector<Edge> star;
    for (Vertex v = 1; v < n; ++v) star.emplace_back(0, v);
    return checked(g, Graph::from_edges(n, star), r);
  }
  if (!is_chordal(g)) return {};
  ForestSearch search(g, r);
  if (!search.apply_certain_edges() || !search.solve()) return {};
  return checked(g, search.tree(), r);
}

namespace {

// Decodes a Prüfer sequence over n >= 2 vertices; returns false as soon as a
// tree edge is missing from G.
bool decode_within(const std::vector<Vertex>& seq, std::size_t n, const Graph& g,
                   std::vector<Edge>& edges) {
  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  edges.clear();
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    if (!g.has_edge(leaf, v)) return false;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  if (!g.has_edge(a, b)) return false;
  edges.emplace_back(a, b);
  return true;
}

}  // namespace

std::vector<Graph> tree_root_bruteforce(const Graph& g, std::uint32_t r, unsigned jobs) {
  const std::size_t n = g.vertex_count();
  if (n > 9) throw GraphError("Prüfer enumeration limited to 9 vertices");
  if (r == 0) throw GraphError("power exponent must be at least 1");
  std::vector<Graph> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(g);
    return out;
  }
  const std::size_t len = n - 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= n;

  std::mutex lock;
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<Vertex> seq(len);
    std::vector<Edge> edges;
    std::vector<Graph> local;
    for (std::size_t code = begin; code < end; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i) {
        seq[i] = static_cast<Vertex>(c % n);
        c /= n;
      }
      if (!decode_within(seq, n, g, edges)) continue;
      Graph t = Graph::from_edges(n, edges);
      if (graph_power(t, r) == g) local.push_back(std::move(t));
    }
    std::lock_guard guard(lock);
    for (auto& t : local) out.push_back(std::move(t));
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, 64);
  if (workers == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(scan, total * w / workers, total * (w + 1) / workers);
    }
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_edges(a) < canonical_edges(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_partition(const Graph& g, std::uint32_t r, const DepthPartition& part) {
  const std::size_t n = g.vertex_count();
  if (part.anchor >= n) throw GraphError("partition anchor out of range");
  if (part.layers.size() != r) {
    throw GraphError("partition needs exactly " + std::to_string(r) + " layers");
  }
  std::vector<bool> seen(n, false);
  seen[part.anchor] = true;
  auto take = [&](const VertexSet& s) {
    for (Vertex v : s) {
      if (v >= n) throw GraphError("partition vertex out of range");
      if (seen[v]) throw GraphError("vertex " + std::to_string(v) + " listed twice in partition");
      seen[v] = true;
    }
  };
  for (const auto& layer : part.layers) take(layer);
  take(part.overflow);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw GraphError("partition does not cover every vertex");
  }
}

Graph build_restriction_gadget(const Graph& g, std::uint32_t r, const DepthPartition& part) {
  validate_partition(g, r, part);
  const auto n = static_cast<Vertex>(g.vertex_count());
  auto w = [&](std::uint32_t i) { return n + i - 1; };
  auto u = [&](std::uint32_t i) { return n + r + i - 1; };
  std::vector<Edge> edges = g.edges();
  for (std::uint32_t i = 1; i <= r; ++i) {
    for (std::uint32_t j = i + 1; j <= r; ++j) {
      edges.emplace_back(w(i), w(j));
      edges.emplace_back(u(i), u(j));
    }
    for (std::uint32_t j = 1; i + j <= r; ++j) edges.emplace_back(w(i), u(j));
    edges.emplace_back(part.anchor, w(i));
    edges.emplace_back(part.anchor, u(i));
    for (std::uint32_t j = 1; i + j <= r; ++j) {
      for (Vertex x : part.layers[j - 1]) {
        edges.emplace_back(x, w(i));
        edges.emplace_back(x, u(i));
      }
    }
  }
  return Graph::from_edges(n + 2 * r, edges);
}

bool satisfies_partition(const Graph& t, std::uint32_t r, const DepthPartition& part) {
  auto dist = bfs_distances(t, part.anchor);
  for (std::uint32_t d = 1; d <= r; ++d) {
    for (Vertex v : part.layers[d - 1]) {
      if (dist[v] != d) return false;
    }
  }
  for (Vertex v : part.overflow) {
    if (dist[v] <= r) return false;
  }
  return true;
}

TreeRootResult restricted_tree_root(const Graph& g, std::uint32_t r, const DepthPartition& part) {
  if (r == 0) throw GraphError("power exponent must be at least 1");
  validate_partition(g, r, part);
  const std::size_t n = g.vertex_count();
  if (n > 1 && part.layers[0].empty()) return {};
  for (std::uint32_t d = 1; d < r; ++d) {
    if (part.layers[d - 1].empty() && !part.layers[d].empty()) return {};
  }
  for (const auto& layer : part.layers) {
    for (Vertex x : layer) {
      if (!g.has_edge(part.anchor, x)) return {};
    }
  }
  for (Vertex x : part.overflow) {
    if (g.has_edge(part.anchor, x)) return {};
  }
  // The gadget adds no cross edges at r = 1; G is its own only candidate.
  if (r == 1) {
    if (!verify_tree_root(g, g, 1) || !satisfies_partition(g, 1, part)) return {};
    return {g, true};
  }

  auto gadget = tree_root(build_restriction_gadget(g, r, part), r);
  if (!gadget) return {};
  std::vector<Edge> edges;
  for (auto [a, b] : gadget.tree->edges()) {
    if (a < n && b < n) edges.emplace_back(a, b);
  }
  Graph t = Graph::from_edges(n, edges);
  if (!verify_tree_root(g, t, r) || !satisfies_partition(t, r, part)) {
    throw std::logic_error("restricted tree root: stripped gadget root fails the direct check");
  }
  return {std::move(t), true};
}

}  // namespace girthroot
