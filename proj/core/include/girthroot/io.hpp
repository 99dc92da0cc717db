#pragma once

#include <string>
#include <string_view>

#include "girthroot/graph.hpp"
#include "girthroot/tree_roots.hpp"

namespace girthroot {

/// {"n": int, "edges": [[u,v],...]} with u<v, edges sorted, plus "labels"
/// when a labeling is given.
std::string to_json(const Graph& g, const VertexLabeling* labels = nullptr);
/// Accepts the to_json format; an optional "labels" array names the vertices.
ParsedGraph graph_from_json(std::string_view text);

std::string to_dot(const Graph& g, const VertexLabeling* labels = nullptr);
/// One "u v" line per edge, isolated vertices as single-token lines.
std::string to_edge_list(const Graph& g, const VertexLabeling* labels = nullptr);

/// JSON if the first non-blank character is '{', edge list otherwise.
ParsedGraph read_graph(std::string_view text);

/// Lines "v: <anchor>", "<d>: <labels...>" for 1 <= d <= r and
/// "> : <labels...>" for the overflow; '#' starts a comment. Omitted layers
/// are empty. Labels resolve through `labels`. The result is validated.
DepthPartition parse_depth_partition(std::string_view text, const Graph& g,
                                     const VertexLabeling& labels, std::uint32_t r);

}  // namespace girthroot
