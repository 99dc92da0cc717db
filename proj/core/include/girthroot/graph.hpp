#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace girthroot {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Raised for malformed input or violated preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the vertex ids 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free. A Graph is immutable once
/// built; all algorithms in this library take it by const reference.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges and
  /// out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

/// Shortest-cycle length, with an explicit sentinel for forests.
///
/// Acyclic compares greater than every finite girth, so forests pass every
/// girth threshold.
class Girth {
 public:
  static Girth acyclic() { return Girth(); }
  static Girth of_length(std::uint32_t length);

  bool is_acyclic() const noexcept { return !length_; }
  std::uint32_t length() const;
  bool at_least(std::uint32_t bound) const noexcept { return !length_ || *length_ >= bound; }

  std::strong_ordering operator<=>(const Girth& other) const noexcept;
  bool operator==(const Girth& other) const noexcept = default;
  std::string to_string() const;

 private:
  Girth() = default;
  std::optional<std::uint32_t> length_;
};

/// Bijection between external string labels and dense internal ids.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  /// Identity labeling "0".."n-1".
  static VertexLabeling identity(std::size_t n);

  /// Returns the id of `label`, inserting it with the next free id if new.
  Vertex intern(std::string_view label);
  std::optional<Vertex> find(std::string_view label) const;
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> ids_;
};

struct ParsedGraph {
  Graph graph;
  VertexLabeling labels;
};

/// Induced subgraph together with the id of each vertex in the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Parses "u v" lines (labels are arbitrary tokens, '#' starts a comment line,
/// a single-token line declares an isolated vertex). Ids follow first
/// appearance.
ParsedGraph parse_edge_list(std::string_view text);

/// Single-source breadth-first distances; kUnreachable for other components.
/// With `limit`, vertices farther than `limit` are left unreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source,
                                         std::uint32_t limit = kUnreachable);
bool is_connected(const Graph& g);
std::uint32_t diameter(const Graph& g);

/// u~v iff 1 <= dist_H(u,v) <= r. Throws GraphError if H is disconnected or
/// r == 0.
Graph graph_power(const Graph& h, std::uint32_t r);
/// Same as graph_power but accepts disconnected graphs (distance = infinity
/// across components).
Graph graph_power_unchecked(const Graph& h, std::uint32_t r);

Girth girth(const Graph& g);
std::uint32_t min_degree(const Graph& g);

/// girth(G) >= g_min and, when `leafless`, every vertex has degree >= 2.
bool is_in_class(const Graph& g, std::uint32_t g_min, bool leafless);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Largest subgraph without degree-one vertices. Throws GraphError when H is
/// disconnected or a tree.
InducedSubgraph core_of(const Graph& h);

/// Vertices that survive `steps` rounds of simultaneous leaf removal.
VertexSet peel_levels(const Graph& h, std::uint32_t steps);

std::vector<Edge> canonical_edges(const Graph& g);

}  // namespace girthroot
