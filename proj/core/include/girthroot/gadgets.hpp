#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "girthroot/graph.hpp"

namespace girthroot {

/// Set-splitting instance: elements 0..n-1, each subset sorted and nonempty.
/// Element i is printed as x_{i+1}.
struct H2CInstance {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> subsets;
};

enum class Color : std::uint8_t { A, B };

struct Coloring {
  std::vector<Color> colors;
  /// Every subset received both colours.
  bool valid = false;
};

/// Gadget graph plus the role of each vertex ("x_1", "T_{1,2}^(1)", "A'", ...).
struct LabeledGadget {
  Graph graph;
  std::vector<std::string> roles;

  std::optional<Vertex> find(std::string_view role) const;
};

/// First line "n m", then m lines of 1-based element indices.
H2CInstance parse_h2c(std::string_view text);
std::string format_h2c(const H2CInstance& inst);
/// Throws GraphError on an empty subset, an out-of-range or repeated element.
void validate_h2c(const H2CInstance& inst);

/// "ABBA" style, one letter per element.
Coloring parse_coloring(const H2CInstance& inst, std::string_view text);
std::string format_coloring(const Coloring& c);
bool is_valid_coloring(const H2CInstance& inst, const std::vector<Color>& colors);

LabeledGadget build_K(const H2CInstance& inst, std::uint32_t r);
LabeledGadget build_H(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors);
LabeledGadget build_G(const H2CInstance& inst, std::uint32_t r);

/// H^r = G edge for edge, without checking that the colouring is valid.
bool reduction_holds(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors);
/// As reduction_holds; throws GraphError if the colouring is not valid.
bool verify_reduction(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors);

/// x_i gets A (B) when it lies within floor(r/2) of A (B) in h; elements
/// reaching neither get B. Throws GraphError if one reaches both.
Coloring extract_coloring(const H2CInstance& inst, std::uint32_t r, const Graph& h);

/// Some valid colouring by exhaustion; requires n <= 20.
std::optional<Coloring> h2c_bruteforce(const H2CInstance& inst);

/// Expected |V(K)| for the instance and r.
std::size_t gadget_vertex_count(const H2CInstance& inst, std::uint32_t r);

}  // namespace girthroot
