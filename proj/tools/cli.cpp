#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "girthroot/gadgets.hpp"
#include "girthroot/generators.hpp"
#include "girthroot/io.hpp"
#include "girthroot/leafless_roots.hpp"
#include "girthroot/recognition.hpp"
#include "girthroot/tree_roots.hpp"

namespace girthroot::cli {

namespace {

using nlohmann::json;

enum class Format { Default, Json, Dot, EdgeList };

enum class Level { Quiet, Warn, Info, Debug };

Level log_level() {
  const char* env = std::getenv("GIRTHROOT_LOG");
  if (!env) return Level::Warn;
  std::string v(env);
  if (v == "quiet" || v == "0") return Level::Quiet;
  if (v == "info" || v == "2") return Level::Info;
  if (v == "debug" || v == "3") return Level::Debug;
  return Level::Warn;
}

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err), level_(log_level()) {}
  void info(const std::string& msg) const { emit(Level::Info, "info", msg); }
  void debug(const std::string& msg) const { emit(Level::Debug, "debug", msg); }

 private:
  void emit(Level at, const char* tag, const std::string& msg) const {
    if (level_ >= at) err_ << "girthroot " << tag << ": " << msg << "\n";
  }
  std::ostream& err_;
  Level level_;
};

struct Options {
  std::string input = "-";
  std::uint32_t r = 0;
  std::uint32_t girth = 0;
  bool leafless = false;
  bool json = false, dot = false, edgelist = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  std::string partition;
  std::string coloring;
  bool verify = false;
  bool tree = false;
  bool power = false;
  std::string kind;
  std::string config;
  std::uint32_t vertices = 10;

  Format format() const {
    if (json) return Format::Json;
    if (dot) return Format::Dot;
    if (edgelist) return Format::EdgeList;
    return Format::Default;
  }
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw GraphError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

// Labels worth printing: nullptr when they are just the vertex ids.
const VertexLabeling* named(const ParsedGraph& parsed) {
  for (Vertex v = 0; v < parsed.labels.size(); ++v) {
    if (parsed.labels.label(v) != std::to_string(v)) return &parsed.labels;
  }
  return nullptr;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

json graph_json(const Graph& g, const VertexLabeling* labels) {
  return json::parse(to_json(g, labels));
}

void emit_graph(std::ostream& out, const Graph& g, const VertexLabeling* labels, Format fmt) {
  switch (fmt) {
    case Format::Json:
      out << to_json(g, labels) << "\n";
      break;
    case Format::Dot:
      out << to_dot(g, labels);
      break;
    default:
      out << to_edge_list(g, labels);
  }
}

// Several graphs in one stream: JSON array, "# name" separated edge lists or
// consecutive DOT blocks.
void emit_graphs(std::ostream& out, const std::vector<Graph>& graphs, const VertexLabeling* labels,
                 Format fmt, const std::string& name) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (fmt == Format::Dot) {
      out << "// " << name << " " << i + 1 << "\n" << to_dot(graphs[i], labels);
    } else {
      out << "# " << name << " " << i + 1 << "\n" << to_edge_list(graphs[i], labels);
    }
  }
}

json graphs_json(const std::vector<Graph>& graphs, const VertexLabeling* labels) {
  json arr = json::array();
  for (const auto& g : graphs) arr.push_back(graph_json(g, labels));
  return arr;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_power(const Options& o, std::istream& in, std::ostream& out, const Log& log) {
  auto parsed = read_graph(slurp(o.input, in));
  Graph p = graph_power(parsed.graph, o.r);
  log.info("power has " + std::to_string(p.edge_count()) + " edges");
  emit_graph(out, p, named(parsed), o.format());
  return kYes;
}

int cmd_roots(const Options& o, std::istream& in, std::ostream& out, const Log& log) {
  auto parsed = read_graph(slurp(o.input, in));
  const std::uint32_t bound = 2 * o.r + 3;
  if (o.girth != 0 && o.girth < bound) {
    throw CLI::ValidationError("--girth", "roots are only enumerated for girth >= " + std::to_string(bound));
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> roots;
  if (o.leafless) {
    roots = all_leafless_roots(parsed.graph, o.r, resolve_jobs(o.jobs)).roots;
  } else {
    auto res = recognize(parsed.graph, o.r, resolve_jobs(o.jobs));
    roots = res.roots;
    if (res.tree) roots.insert(roots.begin(), *res.tree);
  }
  if (o.girth > bound) {
    std::erase_if(roots, [&](const Graph& h) { return !girth(h).at_least(o.girth); });
  }
  log.info(std::to_string(roots.size()) + " roots in " + std::to_string(seconds_since(t0)) + " s");
  const Format fmt = o.format();
  if (fmt == Format::Default || fmt == Format::Json) {
    json doc{{"r", o.r}, {"girth_bound", std::max(bound, o.girth)}, {"count", roots.size()},
             {"roots", graphs_json(roots, named(parsed))}};
    out << doc.dump() << "\n";
  } else {
    emit_graphs(out, roots, named(parsed), fmt, "root");
  }
  return roots.empty() ? kNo : kYes;
}

int cmd_recognize(const Options& o, std::istream& in, std::ostream& out, const Log& log) {
  auto parsed = read_graph(slurp(o.input, in));
  auto t0 = std::chrono::steady_clock::now();
  auto res = recognize(parsed.graph, o.r, resolve_jobs(o.jobs));
  log.info(std::string(res.yes() ? "yes" : "no") + " after " + std::to_string(seconds_since(t0)) +
           " s, " + std::to_string(res.core_candidates) + " core candidates");
  const Format fmt = o.format();
  if (fmt == Format::Default || fmt == Format::Json) {
    json doc{{"answer", res.yes() ? "yes" : "no"},
             {"r", o.r},
             {"tree", res.tree ? graph_json(*res.tree, named(parsed)) : json(nullptr)},
             {"roots", graphs_json(res.roots, named(parsed))},
             {"cores", res.core_candidates}};
    out << doc.dump() << "\n";
  } else {
    out << "# " << (res.yes() ? "yes" : "no") << "\n";
    if (res.tree) emit_graphs(out, {*res.tree}, named(parsed), fmt, "tree");
    emit_graphs(out, res.roots, named(parsed), fmt, "root");
  }
  return res.yes() ? kYes : kNo;
}

int cmd_treeroot(const Options& o, std::istream& in, std::ostream& out, const Log& log) {
  auto parsed = read_graph(slurp(o.input, in));
  TreeRootResult res;
  if (!o.partition.empty()) {
    if (o.partition == "-" && o.input == "-") {
      throw CLI::ValidationError("--restricted", "graph and partition cannot both come from stdin");
    }
    auto part = parse_depth_partition(slurp(o.partition, in), parsed.graph, parsed.labels, o.r);
    res = restricted_tree_root(parsed.graph, o.r, part);
  } else {
    res = tree_root(parsed.graph, o.r);
  }
  log.info(res ? "tree root found" : "no tree root");
  if (!res) {
    if (o.format() == Format::Json) {
      out << json{{"tree", nullptr}}.dump() << "\n";
    } else {
      out << "none\n";
    }
    return kNo;
  }
  emit_graph(out, *res.tree, named(parsed), o.format());
  return kYes;
}

VertexLabeling role_labels(const LabeledGadget& g) {
  VertexLabeling labels;
  for (const auto& role : g.roles) labels.intern(role);
  return labels;
}

int cmd_gadget(const Options& o, std::istream& in, std::ostream& out, std::ostream& err,
               const Log& log) {
  auto inst = parse_h2c(slurp(o.input, in));
  validate_h2c(inst);
  std::optional<std::vector<Color>> colors;
  if (!o.coloring.empty()) {
    colors = parse_coloring(inst, o.coloring).colors;
  } else if (o.verify) {
    if (inst.n > 20) throw CLI::ValidationError("--verify", "needs --with-coloring above 20 elements");
    auto found = h2c_bruteforce(inst);
    if (!found) {
      err << "instance is uncolourable\n";
      if (o.format() == Format::Json || o.format() == Format::Default) {
        out << json{{"colorable", false}}.dump() << "\n";
      } else {
        out << "# uncolorable\n";
      }
      return kNo;
    }
    colors = found->colors;
    log.info("using colouring " + format_coloring(*found));
  }

  auto gs = build_G(inst, o.r);
  auto gs_labels = role_labels(gs);
  std::optional<LabeledGadget> hs;
  std::optional<VertexLabeling> hs_labels;
  if (colors) {
    hs = build_H(inst, o.r, *colors);
    hs_labels = role_labels(*hs);
  }
  std::optional<bool> verified;
  if (o.verify) {
    if (!is_valid_coloring(inst, *colors)) {
      err << "colouring leaves a subset monochromatic\n";
      verified = false;
    } else {
      verified = verify_reduction(inst, o.r, *colors);
    }
  }
  log.info("G_S has " + std::to_string(gs.graph.vertex_count()) + " vertices and " +
           std::to_string(gs.graph.edge_count()) + " edges");

  const Format fmt = o.format();
  if (fmt == Format::Default || fmt == Format::Json) {
    json doc{{"r", o.r}, {"vertices", gs.graph.vertex_count()}, {"G", graph_json(gs.graph, &gs_labels)}};
    if (hs) {
      doc["coloring"] = format_coloring(Coloring{*colors, is_valid_coloring(inst, *colors)});
      doc["H"] = graph_json(hs->graph, &*hs_labels);
    }
    if (verified) doc["verified"] = *verified;
    out << doc.dump() << "\n";
  } else {
    emit_graphs(out, {gs.graph}, &gs_labels, fmt, "G_S");
    if (hs) emit_graphs(out, {hs->graph}, &*hs_labels, fmt, "H_S");
    if (verified) out << "# verified " << (*verified ? "yes" : "no") << "\n";
  }
  return verified.value_or(true) ? kYes : kNo;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out, const Log& log) {
  auto parsed = read_graph(slurp(o.input, in));
  std::vector<Graph> roots;
  if (o.tree) {
    roots = tree_root_bruteforce(parsed.graph, o.r, resolve_jobs(o.jobs));
  } else {
    const std::uint32_t bound = o.girth ? o.girth : 2 * o.r + 3;
    roots = bruteforce_all_roots(parsed.graph, o.r, bound, o.leafless, resolve_jobs(o.jobs));
  }
  log.info(std::to_string(roots.size()) + " roots by exhaustion");
  const Format fmt = o.format();
  if (fmt == Format::Default || fmt == Format::Json) {
    out << json{{"r", o.r}, {"count", roots.size()}, {"roots", graphs_json(roots, named(parsed))}}.dump()
        << "\n";
  } else {
    emit_graphs(out, roots, named(parsed), fmt, "root");
  }
  return roots.empty() ? kNo : kYes;
}

struct GenFlags {
  CLI::Option* r = nullptr;
  CLI::Option* girth = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* min_vertices = nullptr;
  CLI::Option* max_vertices = nullptr;
  CLI::Option* attach = nullptr;
  CLI::Option* deep_tail = nullptr;
  CLI::Option* tree_size = nullptr;
  CLI::Option* tree_depth = nullptr;
  CLI::Option* elements = nullptr;
  CLI::Option* subsets = nullptr;
  CLI::Option* min_subset = nullptr;
  CLI::Option* max_subset = nullptr;
};

int cmd_gen(const Options& o, GenConfig cfg, std::istream& in, std::ostream& out, const Log& log) {
  log.debug("config " + gen_config_to_json(cfg));
  if (o.kind == "h2c") {
    out << format_h2c(random_h2c_instance(cfg));
    return kYes;
  }
  Graph g;
  if (o.kind == "tree") {
    std::mt19937_64 rng(cfg.seed);
    g = random_tree(o.vertices, rng);
  } else {
    g = random_leafless_girth_graph(cfg);
    if (cfg.attach_probability > 0) g = attach_random_trees(g, cfg);
  }
  (void)in;
  if (o.power) g = graph_power(g, cfg.r);
  log.info("generated " + std::to_string(g.vertex_count()) + " vertices");
  emit_graph(out, g, nullptr, o.format());
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph powers, roots of large girth and tree roots."};
  app.name("girthroot");
  app.require_subcommand(1);
  Options o;
  Log log(err);

  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* d = sub->add_flag("--dot", o.dot, "Graphviz output");
    auto* e = sub->add_flag("--edgelist", o.edgelist, "edge list output");
    j->excludes(d)->excludes(e);
    d->excludes(e);
  };
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->default_val("-");
  };
  auto add_r = [&](CLI::App* sub) {
    return sub->add_option("--r", o.r, "power exponent")->required()->check(CLI::Range(1u, 1u << 16));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads, 0 for all cores")->default_val(1);
  };

  auto* power = app.add_subcommand("power", "print G^r");
  add_input(power, "graph file or - for stdin");
  add_r(power);
  add_format(power);

  auto* roots = app.add_subcommand("roots", "all roots of girth >= 2r+3 (exit 1 if none)");
  add_input(roots, "graph file or - for stdin");
  add_r(roots);
  roots->add_flag("--leafless", o.leafless, "only roots of minimum degree 2");
  roots->add_option("--girth", o.girth, "keep roots of at least this girth");
  add_format(roots);
  add_jobs(roots);

  auto* rec = app.add_subcommand("recognize", "decide whether G has a root of girth >= 2r+3");
  add_input(rec, "graph file or - for stdin");
  add_r(rec);
  add_format(rec);
  add_jobs(rec);

  auto* tr = app.add_subcommand("treeroot", "some tree T with T^r = G, or none");
  add_input(tr, "graph file or - for stdin");
  add_r(tr);
  tr->add_option("--restricted", o.partition, "depth partition file");
  add_format(tr);

  auto* gad = app.add_subcommand("gadget", "hardness gadget for a set-splitting instance");
  add_input(gad, "instance file or - for stdin");
  add_r(gad)->check(CLI::Range(2u, 1u << 16));
  gad->add_option("--with-coloring", o.coloring, "colouring such as ABBA");
  gad->add_flag("--verify", o.verify, "check H^r = G for the colouring");
  add_format(gad);

  auto* orc = app.add_subcommand("oracle", "roots by exhaustive search (small graphs)");
  add_input(orc, "graph file or - for stdin");
  add_r(orc);
  orc->add_option("--girth", o.girth, "girth bound, default 2r+3");
  orc->add_flag("--leafless", o.leafless, "only roots of minimum degree 2");
  orc->add_flag("--tree", o.tree, "enumerate tree roots instead");
  add_format(orc);
  add_jobs(orc);

  auto* gen = app.add_subcommand("gen", "seeded instances: class, tree or h2c");
  gen->add_option("kind", o.kind, "class, tree or h2c")->required()->check(CLI::IsMember({"class", "tree", "h2c"}));
  gen->add_option("--config", o.config, "JSON file with generator settings");
  GenFlags gf;
  GenConfig flag_cfg;
  gf.r = gen->add_option("--r", flag_cfg.r, "power exponent")->check(CLI::Range(1u, 1u << 16));
  gf.girth = gen->add_option("--girth", flag_cfg.girth, "girth target, default 2r+3");
  gf.seed = gen->add_option("--seed", flag_cfg.seed, "random seed");
  gf.min_vertices = gen->add_option("--min-vertices", flag_cfg.min_vertices);
  gf.max_vertices = gen->add_option("--max-vertices", flag_cfg.max_vertices);
  gf.attach = gen->add_option("--attach-probability", flag_cfg.attach_probability)->check(CLI::Range(0.0, 1.0));
  gf.deep_tail = gen->add_option("--deep-tail-probability", flag_cfg.deep_tail_probability)->check(CLI::Range(0.0, 1.0));
  gf.tree_size = gen->add_option("--max-tree-size", flag_cfg.max_tree_size);
  gf.tree_depth = gen->add_option("--max-tree-depth", flag_cfg.max_tree_depth);
  gf.elements = gen->add_option("--elements", flag_cfg.h2c_elements);
  gf.subsets = gen->add_option("--subsets", flag_cfg.h2c_subsets);
  gf.min_subset = gen->add_option("--min-subset", flag_cfg.h2c_min_subset);
  gf.max_subset = gen->add_option("--max-subset", flag_cfg.h2c_max_subset);
  gen->add_option("--vertices", o.vertices, "tree size")->check(CLI::Range(1u, 1u << 20));
  gen->add_flag("--power", o.power, "print the r-th power instead");
  add_format(gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "girthroot: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (power->parsed()) return cmd_power(o, in, out, log);
    if (roots->parsed()) return cmd_roots(o, in, out, log);
    if (rec->parsed()) return cmd_recognize(o, in, out, log);
    if (tr->parsed()) return cmd_treeroot(o, in, out, log);
    if (gad->parsed()) return cmd_gadget(o, in, out, err, log);
    if (orc->parsed()) return cmd_oracle(o, in, out, log);
    if (gen->parsed()) {
      GenConfig cfg = o.config.empty() ? GenConfig{} : gen_config_from_json(slurp(o.config, in));
      auto take = [](CLI::Option* opt, auto& field, const auto& value) {
        if (opt->count() > 0) field = value;
      };
      take(gf.r, cfg.r, flag_cfg.r);
      take(gf.girth, cfg.girth, flag_cfg.girth);
      take(gf.seed, cfg.seed, flag_cfg.seed);
      take(gf.min_vertices, cfg.min_vertices, flag_cfg.min_vertices);
      take(gf.max_vertices, cfg.max_vertices, flag_cfg.max_vertices);
      take(gf.attach, cfg.attach_probability, flag_cfg.attach_probability);
      take(gf.deep_tail, cfg.deep_tail_probability, flag_cfg.deep_tail_probability);
      take(gf.tree_size, cfg.max_tree_size, flag_cfg.max_tree_size);
      take(gf.tree_depth, cfg.max_tree_depth, flag_cfg.max_tree_depth);
      take(gf.elements, cfg.h2c_elements, flag_cfg.h2c_elements);
      take(gf.subsets, cfg.h2c_subsets, flag_cfg.h2c_subsets);
      take(gf.min_subset, cfg.h2c_min_subset, flag_cfg.h2c_min_subset);
      take(gf.max_subset, cfg.h2c_max_subset, flag_cfg.h2c_max_subset);
      return cmd_gen(o, cfg, in, out, log);
    }
  } catch (const CLI::Error& e) {
    err << "girthroot: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    err << "girthroot: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace girthroot::cli
