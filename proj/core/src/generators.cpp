#include "girthroot/generators.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <mutex>
#include <nlohmann/json.hpp>
#include <numeric>
#include <thread>

namespace girthroot {

using nlohmann::json;

namespace {

template <typename Field>
void read_field(const json& doc, const char* key, Field& field) {
  if (doc.contains(key)) field = doc.at(key).get<Field>();
}

}  // namespace

GenConfig gen_config_from_json(std::string_view text) {
  GenConfig cfg;
  try {
    auto doc = json::parse(text);
    if (!doc.is_object()) throw GraphError("generator config must be a JSON object");
    static const std::vector<std::string> known{
        "seed", "r", "girth", "min_vertices", "max_vertices", "attach_probability",
        "max_tree_size", "max_tree_depth", "deep_tail_probability", "h2c_elements",
        "h2c_subsets", "h2c_min_subset", "h2c_max_subset"};
    for (const auto& [key, value] : doc.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw GraphError("unknown generator config key '" + key + "'");
      }
    }
    read_field(doc, "seed", cfg.seed);
    read_field(doc, "r", cfg.r);
    read_field(doc, "girth", cfg.girth);
    read_field(doc, "min_vertices", cfg.min_vertices);
    read_field(doc, "max_vertices", cfg.max_vertices);
    read_field(doc, "attach_probability", cfg.attach_probability);
    read_field(doc, "max_tree_size", cfg.max_tree_size);
    read_field(doc, "max_tree_depth", cfg.max_tree_depth);
    read_field(doc, "deep_tail_probability", cfg.deep_tail_probability);
    read_field(doc, "h2c_elements", cfg.h2c_elements);
    read_field(doc, "h2c_subsets", cfg.h2c_subsets);
    read_field(doc, "h2c_min_subset", cfg.h2c_min_subset);
    read_field(doc, "h2c_max_subset", cfg.h2c_max_subset);
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed generator config: ") + e.what());
  }
  return cfg;
}

std::string gen_config_to_json(const GenConfig& cfg) {
  json doc{{"seed", cfg.seed},
           {"r", cfg.r},
           {"girth", cfg.girth_target()},
           {"min_vertices", cfg.min_vertices},
           {"max_vertices", cfg.max_vertices},
           {"attach_probability", cfg.attach_probability},
           {"max_tree_size", cfg.max_tree_size},
           {"max_tree_depth", cfg.max_tree_depth},
           {"deep_tail_probability", cfg.deep_tail_probability},
           {"h2c_elements", cfg.h2c_elements},
           {"h2c_subsets", cfg.h2c_subsets},
           {"h2c_min_subset", cfg.h2c_min_subset},
           {"h2c_max_subset", cfg.h2c_max_subset}};
  return doc.dump();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw GraphError("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_leafless_girth_graph(const GenConfig& cfg) {
  const std::uint32_t g = cfg.girth_target();
  if (g < 3) throw GraphError("girth target must be at least 3");
  if (cfg.min_vertices > cfg.max_vertices) throw GraphError("min_vertices exceeds max_vertices");
  if (cfg.max_vertices < g) {
    throw GraphError("vertex budget " + std::to_string(cfg.max_vertices) +
                     " cannot hold a cycle of length " + std::to_string(g));
  }
  std::mt19937_64 rng(cfg.seed);
  const std::uint32_t lo = std::max(cfg.min_vertices, g);
  const std::uint32_t target = lo + static_cast<std::uint32_t>(uniform_below(rng, cfg.max_vertices - lo + 1));

  std::vector<Edge> edges;
  std::uint32_t n = g;
  for (Vertex v = 0; v < g; ++v) edges.emplace_back(v, (v + 1) % g);

  while (n < target) {
    Graph cur = Graph::from_edges(n, edges);
    const std::uint32_t budget = cfg.max_vertices - n;
    struct Option {
      Vertex u, v;
      std::uint32_t min_len;
    };
    std::vector<Option> options;
    for (Vertex u = 0; u < n; ++u) {
      auto dist = bfs_distances(cur, u);
      for (Vertex v = u; v < n; ++v) {
        std::uint32_t need = u == v ? g : std::max<std::uint32_t>(2, g > dist[v] ? g - dist[v] : 0);
        if (need - 1 <= budget) options.push_back({u, v, need});
      }
    }
    if (options.empty()) break;
    const auto& pick = options[uniform_below(rng, options.size())];
    const std::uint32_t max_len = std::min(budget + 1, pick.min_len + 2);
    const std::uint32_t len = pick.min_len + static_cast<std::uint32_t>(uniform_below(rng, max_len - pick.min_len + 1));
    Vertex prev = pick.u;
    for (std::uint32_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, pick.v);
    assert(girth(Graph::from_edges(n, edges)).at_least(g));
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::uint32_t n, std::mt19937_64& rng) {
  if (n <= 1) return Graph(n);
  std::vector<Vertex> seq(n - 2);
  for (auto& s : seq) s = static_cast<Vertex>(uniform_below(rng, n));
  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph attach_random_trees(const Graph& h, const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges = h.edges();
  auto n = static_cast<Vertex>(h.vertex_count());
  const Vertex core_n = n;
  for (Vertex v = 0; v < core_n; ++v) {
    if (uniform_unit(rng) >= cfg.attach_probability) continue;
    std::uint32_t size = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::max<std::uint32_t>(cfg.max_tree_size, 1)));
    std::vector<Vertex> nodes{v};
    std::vector<std::uint32_t> depth{0};
    if (cfg.max_tree_depth > 0 && uniform_unit(rng) < cfg.deep_tail_probability) {
      size = std::max(size, cfg.max_tree_depth);
      for (std::uint32_t d = 1; d <= cfg.max_tree_depth; ++d) {
        edges.emplace_back(nodes.back(), n);
        nodes.push_back(n++);
        depth.push_back(d);
        --size;
      }
    }
    for (; size > 0; --size) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (depth[i] < cfg.max_tree_depth) open.push_back(i);
      }
      if (open.empty()) break;
      auto parent = open[uniform_below(rng, open.size())];
      edges.emplace_back(nodes[parent], n);
      nodes.push_back(n++);
      depth.push_back(depth[parent] + 1);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> bruteforce_all_roots(const Graph& g, std::uint32_t r, std::uint32_t g_min,
                                        bool leafless, unsigned jobs) {
  const auto edges = g.edges();
  if (edges.size() > 18) throw GraphError("root oracle limited to 18 edges");
  if (r == 0) throw GraphError("power exponent must be at least 1");
  const std::size_t n = g.vertex_count();
  const std::uint32_t total = 1u << edges.size();

  std::mutex lock;
  std::vector<Graph> out;
  auto scan = [&](std::uint32_t begin, std::uint32_t end) {
    std::vector<Graph> local;
    std::vector<Edge> chosen;
    std::vector<Vertex> parent(n);
    for (std::uint32_t mask = begin; mask < end; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
      std::iota(parent.begin(), parent.end(), 0);
      auto root = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      chosen.clear();
      std::size_t parts = n;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!((mask >> i) & 1u)) continue;
        chosen.push_back(edges[i]);
        Vertex a = root(edges[i].first), b = root(edges[i].second);
        if (a != b) {
          parent[a] = b;
          --parts;
        }
      }
      if (parts > 1) continue;
      Graph h = Graph::from_edges(n, chosen);
      if (leafless && min_degree(h) < 2) continue;
      if (!girth(h).at_least(g_min)) continue;
      if (graph_power(h, r) == g) local.push_back(std::move(h));
    }
    std::lock_guard guard(lock);
    for (auto& h : local) out.push_back(std::move(h));
  };
  const std::uint32_t workers = std::clamp<std::uint32_t>(jobs, 1, 64);
  if (workers == 1 || total < 1024) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) {
      pool.emplace_back(scan, static_cast<std::uint32_t>(std::uint64_t{total} * w / workers),
                        static_cast<std::uint32_t>(std::uint64_t{total} * (w + 1) / workers));
    }
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_edges(a) < canonical_edges(b);
  });
  return out;
}

H2CInstance random_h2c_instance(const GenConfig& cfg) {
  if (cfg.h2c_min_subset < 1 || cfg.h2c_min_subset > cfg.h2c_max_subset) {
    throw GraphError("subset size range must satisfy 1 <= min <= max");
  }
  if (cfg.h2c_elements == 0) throw GraphError("instance needs at least one element");
  std::mt19937_64 rng(cfg.seed);
  H2CInstance inst;
  inst.n = cfg.h2c_elements;
  const std::uint32_t hi = std::min(cfg.h2c_max_subset, inst.n);
  const std::uint32_t lo = std::min(cfg.h2c_min_subset, hi);
  std::vector<std::uint32_t> pool(inst.n);
  for (std::uint32_t s = 0; s < cfg.h2c_subsets; ++s) {
    std::iota(pool.begin(), pool.end(), 0);
    auto size = lo + static_cast<std::uint32_t>(uniform_below(rng, hi - lo + 1));
    for (std::uint32_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + uniform_below(rng, inst.n - i)]);
    }
    std::vector<std::uint32_t> subset(pool.begin(), pool.begin() + size);
    std::sort(subset.begin(), subset.end());
    inst.subsets.push_back(std::move(subset));
  }
  return inst;
}

}  // namespace girthroot
