#include "girthroot/gadgets.hpp"

#include <algorithm>
#include <sstream>

namespace girthroot {

std::optional<Vertex> LabeledGadget::find(std::string_view role) const {
  auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) return std::nullopt;
  return static_cast<Vertex>(it - roles.begin());
}

void validate_h2c(const H2CInstance& inst) {
  for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
    const auto& s = inst.subsets[j];
    if (s.empty()) throw GraphError("subset " + std::to_string(j + 1) + " is empty");
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] >= inst.n) {
        throw GraphError("subset " + std::to_string(j + 1) + " names element " +
                         std::to_string(s[t] + 1) + " beyond n");
      }
      if (t > 0 && s[t] <= s[t - 1]) {
        throw GraphError("subset " + std::to_string(j + 1) + " is unsorted or repeats an element");
      }
    }
  }
}

H2CInstance parse_h2c(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw GraphError("instance file is empty");
  H2CInstance inst;
  long long n = -1, m = -1;
  std::string extra;
  std::istringstream head(lines[0]);
  if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0) {
    throw GraphError("instance header must be \"n m\"");
  }
  if (static_cast<std::size_t>(m) + 1 != lines.size()) {
    throw GraphError("instance declares " + std::to_string(m) + " subsets but lists " +
                     std::to_string(lines.size() - 1));
  }
  inst.n = static_cast<std::uint32_t>(n);
  for (std::size_t j = 1; j < lines.size(); ++j) {
    std::istringstream ls(lines[j]);
    std::vector<std::uint32_t> subset;
    std::string tok;
    while (ls >> tok) {
      long long e = 0;
      try {
        std::size_t used = 0;
        e = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw GraphError("bad element index '" + tok + "'");
      }
      if (e < 1 || e > n) throw GraphError("element index " + tok + " out of range");
      subset.push_back(static_cast<std::uint32_t>(e - 1));
    }
    std::sort(subset.begin(), subset.end());
    inst.subsets.push_back(std::move(subset));
  }
  validate_h2c(inst);
  return inst;
}

std::string format_h2c(const H2CInstance& inst) {
  std::ostringstream out;
  out << inst.n << " " << inst.subsets.size() << "\n";
  for (const auto& s : inst.subsets) {
    for (std::size_t t = 0; t < s.size(); ++t) out << (t ? " " : "") << s[t] + 1;
    out << "\n";
  }
  return out.str();
}

bool is_valid_coloring(const H2CInstance& inst, const std::vector<Color>& colors) {
  if (colors.size() != inst.n) return false;
  for (const auto& s : inst.subsets) {
    bool a = false, b = false;
    for (auto e : s) (colors[e] == Color::A ? a : b) = true;
    if (!a || !b) return false;
  }
  return true;
}

Coloring parse_coloring(const H2CInstance& inst, std::string_view text) {
  Coloring c;
  for (char ch : text) {
    if (ch == 'A' || ch == 'a') c.colors.push_back(Color::A);
    else if (ch == 'B' || ch == 'b') c.colors.push_back(Color::B);
    else throw GraphError(std::string("colouring may only use A and B, got '") + ch + "'");
  }
  if (c.colors.size() != inst.n) {
    throw GraphError("colouring has " + std::to_string(c.colors.size()) + " letters, need " +
                     std::to_string(inst.n));
  }
  c.valid = is_valid_coloring(inst, c.colors);
  return c;
}

std::string format_coloring(const Coloring& c) {
  std::string s;
  for (auto col : c.colors) s.push_back(col == Color::A ? 'A' : 'B');
  return s;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Id layout: x's, S's, specials, T's, P's, tails.
class Layout {
 public:
  Layout(const H2CInstance& inst, std::uint32_t r) : inst_(inst), r_(r), k_(r / 2) {
    if (r < 2) throw GraphError("gadgets need r >= 2");
    validate_h2c(inst);
    even_ = r % 2 == 0;
    for (std::size_t i = 0; i < inst.n; ++i) x_.push_back(add("x_" + idx(i)));
    for (std::size_t j = 0; j < inst.subsets.size(); ++j) s_.push_back(add("S_" + idx(j)));
    X_ = add("X");
    A_ = add("A");
    if (even_) A2_ = add("A'");
    B_ = add("B");
    if (even_) B2_ = add("B'");
    t_.resize(inst.subsets.size());
    for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
      for (auto i : inst.subsets[j]) {
        auto& path = t_[j].emplace_back();
        for (std::uint32_t l = 1; l < k_; ++l) {
          path.push_back(add("T_{" + idx(i) + "," + idx(j) + "}^(" + std::to_string(l) + ")"));
        }
      }
    }
    pa_.resize(inst.n);
    pb_.resize(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::uint32_t l = 1; l < k_; ++l) {
        auto sup = "^(" + std::to_string(l) + ")";
        if (even_) {
          pa_[i].push_back(add("P_{" + idx(i) + ",A}" + sup));
          pb_[i].push_back(add("P_{" + idx(i) + ",B}" + sup));
        } else {
          pa_[i].push_back(add("P_" + idx(i) + sup));
        }
      }
    }
    tail_.resize(inst.subsets.size());
    for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
      for (std::uint32_t l = 1; l <= r; ++l) {
        tail_[j].push_back(add("S_" + idx(j) + "^(" + std::to_string(l) + ")"));
      }
    }
  }

  std::vector<Edge> k_edges() const {
    std::vector<Edge> e;
    auto path = [&](Vertex from, const std::vector<Vertex>& mid, std::optional<Vertex> to) {
      Vertex prev = from;
      for (Vertex v : mid) {
        e.emplace_back(prev, v);
        prev = v;
      }
      if (to) e.emplace_back(prev, *to);
    };
    for (std::size_t j = 0; j < inst_.subsets.size(); ++j) {
      for (std::size_t t = 0; t < inst_.subsets[j].size(); ++t) {
        path(s_[j], t_[j][t], x_[inst_.subsets[j][t]]);
      }
    }
    for (std::size_t i = 0; i < inst_.n; ++i) {
      path(x_[i], pa_[i], std::nullopt);
      if (even_) path(x_[i], pb_[i], std::nullopt);
      e.emplace_back(X_, x_[i]);
    }
    if (even_) {
      e.emplace_back(A_, A2_);
      e.emplace_back(B_, B2_);
    }
    for (std::size_t j = 0; j < inst_.subsets.size(); ++j) path(s_[j], tail_[j], std::nullopt);
    return e;
  }

  std::vector<Edge> color_edges(const std::vector<Color>& colors) const {
    if (colors.size() != inst_.n) throw GraphError("colouring size differs from n");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < inst_.n; ++i) {
      Vertex end_a = pa_[i].empty() ? x_[i] : pa_[i].back();
      if (!even_) {
        e.emplace_back(end_a, colors[i] == Color::A ? A_ : B_);
        continue;
      }
      Vertex end_b = pb_[i].empty() ? x_[i] : pb_[i].back();
      if (colors[i] == Color::A) {
        e.emplace_back(end_a, A_);
        e.emplace_back(end_b, B2_);
      } else {
        e.emplace_back(end_a, A2_);
        e.emplace_back(end_b, B_);
      }
    }
    return e;
  }

  std::vector<Edge> extra_edges() const {
    std::vector<Vertex> targets(x_.begin(), x_.end());
    targets.insert(targets.end(), s_.begin(), s_.end());
    targets.push_back(X_);
    for (const auto& per_subset : t_) {
      for (const auto& path : per_subset) targets.insert(targets.end(), path.begin(), path.end());
    }
    for (std::size_t i = 0; i < inst_.n; ++i) {
      targets.insert(targets.end(), pa_[i].begin(), pa_[i].end());
      targets.insert(targets.end(), pb_[i].begin(), pb_[i].end());
    }
    std::vector<Vertex> hubs{A_, B_};
    if (even_) {
      hubs.push_back(A2_);
      hubs.push_back(B2_);
    } else {
      for (const auto& tail : tail_) targets.push_back(tail.front());
    }
    std::vector<Edge> e;
    for (Vertex h : hubs) {
      for (Vertex t : targets) e.emplace_back(h, t);
    }
    if (even_) {
      e.emplace_back(A_, B2_);
      e.emplace_back(B_, A2_);
    }
    return e;
  }

  LabeledGadget make(std::vector<Edge> edges) const {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {Graph::from_edges(roles_.size(), edges), roles_};
  }

  std::size_t size() const { return roles_.size(); }
  Vertex a() const { return A_; }
  Vertex b() const { return B_; }
  Vertex x(std::size_t i) const { return x_[i]; }

 private:
  Vertex add(std::string role) {
    roles_.push_back(std::move(role));
    return static_cast<Vertex>(roles_.size() - 1);
  }

  const H2CInstance& inst_;
  std::uint32_t r_;
  std::uint32_t k_;
  bool even_ = false;
  std::vector<std::string> roles_;
  std::vector<Vertex> x_, s_;
  Vertex X_ = 0, A_ = 0, B_ = 0, A2_ = 0, B2_ = 0;
  std::vector<std::vector<std::vector<Vertex>>> t_;
  std::vector<std::vector<Vertex>> pa_, pb_, tail_;
};

}  // namespace

LabeledGadget build_K(const H2CInstance& inst, std::uint32_t r) {
  Layout layout(inst, r);
  return layout.make(layout.k_edges());
}

LabeledGadget build_H(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors) {
  Layout layout(inst, r);
  auto edges = layout.k_edges();
  auto extra = layout.color_edges(colors);
  edges.insert(edges.end(), extra.begin(), extra.end());
  return layout.make(std::move(edges));
}

LabeledGadget build_G(const H2CInstance& inst, std::uint32_t r) {
  Layout layout(inst, r);
  auto k = layout.make(layout.k_edges());
  auto edges = graph_power_unchecked(k.graph, r).edges();
  auto extra = layout.extra_edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return layout.make(std::move(edges));
}

bool reduction_holds(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors) {
  auto h = build_H(inst, r, colors);
  return graph_power_unchecked(h.graph, r) == build_G(inst, r).graph;
}

bool verify_reduction(const H2CInstance& inst, std::uint32_t r, const std::vector<Color>& colors) {
  if (!is_valid_coloring(inst, colors)) {
    throw GraphError("verify_reduction needs a valid 2-colouring");
  }
  return reduction_holds(inst, r, colors);
}

Coloring extract_coloring(const H2CInstance& inst, std::uint32_t r, const Graph& h) {
  Layout layout(inst, r);
  if (h.vertex_count() != layout.size()) {
    throw GraphError("graph does not match the gadget vertex layout");
  }
  const std::uint32_t k = r / 2;
  auto da = bfs_distances(h, layout.a(), k);
  auto db = bfs_distances(h, layout.b(), k);
  Coloring c;
  for (std::size_t i = 0; i < inst.n; ++i) {
    bool near_a = da[layout.x(i)] <= k;
    bool near_b = db[layout.x(i)] <= k;
    if (near_a && near_b) {
      throw GraphError("x_" + idx(i) + " lies within " + std::to_string(k) + " of both A and B");
    }
    c.colors.push_back(near_a ? Color::A : Color::B);
  }
  c.valid = is_valid_coloring(inst, c.colors);
  return c;
}

std::optional<Coloring> h2c_bruteforce(const H2CInstance& inst) {
  if (inst.n > 20) throw GraphError("exhaustive colouring limited to 20 elements");
  validate_h2c(inst);
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.subsets) {
    std::uint32_t m = 0;
    for (auto e : s) m |= 1u << e;
    masks.push_back(m);
  }
  for (std::uint32_t bits = 0; bits < (1u << inst.n); ++bits) {
    bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
      return (bits & m) != 0 && (bits & m) != m;
    });
    if (!ok) continue;
    Coloring c;
    for (std::uint32_t i = 0; i < inst.n; ++i) {
      c.colors.push_back((bits >> i) & 1u ? Color::B : Color::A);
    }
    c.valid = true;
    return c;
  }
  return std::nullopt;
}

std::size_t gadget_vertex_count(const H2CInstance& inst, std::uint32_t r) {
  const std::size_t k = r / 2, n = inst.n, m = inst.subsets.size();
  std::size_t sigma = 0;
  for (const auto& s : inst.subsets) sigma += s.size();
  if (r % 2 == 1) return n + m + 3 + (k - 1) * sigma + (k - 1) * n + r * m;
  return n + m + 5 + (k - 1) * sigma + 2 * n * (k - 1) + r * m;
}

}  // namespace girthroot
