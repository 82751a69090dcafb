#include "anum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "anum/closed_forms.hpp"
#include "anum/decomposition.hpp"
#include "anum/engine.hpp"
#include "anum/error.hpp"
#include "anum/graph_io.hpp"
#include "anum/json_io.hpp"
#include "anum/recomplement.hpp"
#include "anum/scan.hpp"
#include "anum/sequence_shape.hpp"
#include "anum/verify.hpp"

namespace anum {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string family;
  int n = -1;
  int m = 0;
  std::string edges_file;
  std::string graph6;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family, "path | cycle | star | complete | complete_bipartite");
  cmd->add_option("--n", src.n, "Vertex count (first part for complete_bipartite)");
  cmd->add_option("--m", src.m, "Second part size for complete_bipartite");
  cmd->add_option("--edges", src.edges_file, "Edge-list file ('-' reads stdin)");
  cmd->add_option("--graph6", src.graph6, "graph6 string");
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

FamilySpec family_spec(const std::string& kind, int n, int m) {
  const auto k = parse_family_kind(kind);
  if (!k) throw UsageError("unknown family '" + kind + "'");
  if (n < 0) throw UsageError("--n is required with a family");
  return FamilySpec{*k, n, m};
}

Graph load_graph(const GraphSource& src) {
  const int sources = !src.family.empty() + !src.edges_file.empty() + !src.graph6.empty();
  if (sources != 1) throw UsageError("give exactly one of --family, --edges, --graph6");
  if (!src.family.empty()) return family(family_spec(src.family, src.n, src.m));
  if (!src.edges_file.empty()) return parse_edge_list(read_text(src.edges_file));
  return parse_graph6(src.graph6);
}

std::string seq_text(const ASequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + seq[i].get_str();
  return out;
}

std::string graph_text(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + " graph6=" + emit_graph6(g);
}

std::string shape_text(const SequenceShape& s) {
  std::string out = s.unimodal ? "unimodal" : "not unimodal";
  out += s.tail_peaked ? ", tail-peaked" : ", not tail-peaked";
  out += s.log_concave ? ", log-concave" : ", not log-concave (first break at " + std::to_string(*s.first_violation) + ")";
  return out + ", peak at " + std::to_string(s.peak_index);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_compute(const Graph& g, const EngineOptions& opts, bool json, std::ostream& out) {
  const SaTable table = sa_all_subsets(g, opts);
  const BigInt s = sa(g, opts);
  const ASequence seq = a_sequence(table);
  const SequenceShape shape = analyze(seq);
  const BigInt b = b_number(table);
  if (json) {
    Json doc;
    doc["format"] = kJsonFormat;
    doc["graph"] = graph_json(g);
    doc["sa"] = to_json(s);
    doc["a"] = to_json(BigInt(abs(s)));
    doc["b"] = to_json(b);
    doc["a_sequence"] = to_json(seq);
    doc["shape"] = to_json(shape);
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "graph       " << graph_text(g) << '\n'
      << "sa          " << s << '\n'
      << "a           " << abs(s) << '\n'
      << "b           " << b << '\n'
      << "a_sequence  " << seq_text(seq) << '\n'
      << "shape       " << shape_text(shape) << '\n';
  return kExitOk;
}

int cmd_rc(const Graph& g, const std::string& set_text, bool json, std::ostream& out) {
  const VertexSet removed = parse_vertex_list(set_text, g);
  const LabeledGraph rc = reconnected_complement(g, removed);
  std::vector<EdgePair> edges;
  for (const auto& e : rc.graph.edges()) {
    edges.push_back(EdgePair{rc.labels[static_cast<std::size_t>(e.a)], rc.labels[static_cast<std::size_t>(e.b)]});
  }
  if (json) {
    Json vertices = Json::array();
    for (int v : rc.labels) vertices.push_back(v + 1);
    Json edge_list = Json::array();
    for (const auto& e : edges) edge_list.push_back(to_json(e));
    Json doc;
    doc["format"] = kJsonFormat;
    doc["graph"] = graph_json(g);
    doc["set"] = to_json(removed);
    doc["reconnected_complement"] = Json{{"vertices", vertices}, {"edges", edge_list}, {"graph6", emit_graph6(rc.graph)}};
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "graph     " << graph_text(g) << '\n' << "set       " << format_vertex_set(removed) << '\n' << "vertices ";
  for (int v : rc.labels) out << ' ' << v + 1;
  out << "\nedges    ";
  for (const auto& e : edges) out << " {" << e.a + 1 << ',' << e.b + 1 << '}';
  out << '\n';
  return kExitOk;
}

int cmd_decompose(const Graph& g, const std::string& edge_text, const EngineOptions& opts, bool json,
                  std::ostream& out) {
  const EdgePair e = parse_edge_pair(edge_text, g);
  const DecompositionReport r = verify_decomposition(g, e, opts);
  if (json) {
    out << decomposition_json(r).dump() << '\n';
  } else {
    out << "graph       " << graph_text(g) << '\n'
        << "edge        {" << e.a + 1 << ',' << e.b + 1 << "}\n"
        << "a_sequence  " << seq_text(r.base_sequence) << '\n';
    out << "J               weight  tail\n";
    for (const auto& t : r.terms) {
      const std::string j = format_vertex_set(t.j);
      const std::string w = t.weight.get_str();
      out << j << std::string(j.size() < 16 ? 16 - j.size() : 1, ' ') << w
          << std::string(w.size() < 8 ? 8 - w.size() : 1, ' ') << seq_text(t.tail) << '\n';
    }
    out << "lhs         " << seq_text(r.lhs) << '\n'
        << "rhs         " << seq_text(r.rhs) << '\n'
        << (r.rhs_check ? "identity holds\n" : "identity FAILS\n");
  }
  return r.rhs_check ? kExitOk : kExitAssertion;
}

int cmd_family(const FamilySpec& spec, const EngineOptions& opts, bool json, std::ostream& out) {
  const Graph g = family(spec);
  const auto closed = family_closed_form(spec);
  std::optional<ASequence> engine;
  if (g.order() <= opts.max_order) engine = a_sequence(g, opts);
  std::optional<bool> agree;
  if (closed && engine) agree = *closed == *engine;

  if (json) {
    Json doc;
    doc["format"] = kJsonFormat;
    doc["family"] = Json{{"kind", std::string(to_string(spec.kind))}, {"n", spec.n}, {"m", spec.m}};
    doc["graph"] = graph_json(g);
    doc["closed_form"] = closed ? to_json(*closed) : Json(nullptr);
    doc["a_sequence"] = engine ? to_json(*engine) : Json(nullptr);
    doc["agree"] = agree ? Json(*agree) : Json(nullptr);
    out << doc.dump() << '\n';
  } else {
    out << "family       " << to_string(spec.kind) << " n=" << spec.n;
    if (spec.kind == FamilyKind::CompleteBipartite) out << " m=" << spec.m;
    out << '\n'
        << "closed_form  " << (closed ? seq_text(*closed) : "none") << '\n'
        << "engine       " << (engine ? seq_text(*engine) : "skipped (above --max-n)") << '\n'
        << "agree        " << (agree ? (*agree ? "yes" : "NO") : "n/a") << '\n';
  }
  return agree.value_or(true) ? kExitOk : kExitAssertion;
}

void print_error(std::ostream& err, bool json, std::string_view kind, const std::string& message,
                 std::optional<std::size_t> line = std::nullopt) {
  if (json) {
    Json e{{"kind", kind}, {"message", message}};
    if (line) e["line"] = *line;
    err << Json{{"format", kJsonFormat}, {"error", e}}.dump() << '\n';
  } else {
    err << "error: " << message;
    if (line && *line > 0) err << " (line " << *line << ')';
    err << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact a-numbers, a-sequences and b-numbers of small graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  int max_n = EngineOptions{}.max_order;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--max-n", max_n, "Engine vertex cap")->check(CLI::Range(0, kMaxVertices));

  GraphSource src;
  auto* compute = app.add_subcommand("compute", "sa, a, b, a-sequence and shape of a graph");
  add_graph_options(compute, src);

  std::string set_text;
  auto* rc = app.add_subcommand("rc", "Reconnected complement G*_I");
  add_graph_options(rc, src);
  rc->add_option("--set", set_text, "Removed vertices, e.g. 1,2")->required();

  std::string edge_text;
  auto* decompose = app.add_subcommand("decompose", "Edge-addition decomposition report");
  add_graph_options(decompose, src);
  decompose->add_option("--edge", edge_text, "Added pair, e.g. 1,6")->required();

  std::string kind;
  int fam_n = -1;
  int fam_m = 0;
  auto* fam = app.add_subcommand("family", "Closed-form sequence of a family, checked against the engine");
  fam->add_option("--kind,--family", kind, "path | cycle | star | complete | complete_bipartite")->required();
  fam->add_option("--n", fam_n, "Vertex count")->required();
  fam->add_option("--m", fam_m, "Second part size for complete_bipartite");

  int scan_n = -1;
  std::string mode = "exhaustive";
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string cls;
  std::string checks = "unimodal";
  std::string checkpoint;
  std::size_t max_graphs = 0;
  auto* scan = app.add_subcommand("scan", "Check sequence properties over many graphs (JSON lines)");
  scan->add_option("--n", scan_n, "Vertex count")->required();
  scan->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
  scan->add_option("--samples", samples, "Random graphs to draw");
  scan->add_option("--seed", seed, "Random seed");
  scan->add_option("--class", cls, "connected | hamiltonian | universal");
  scan->add_option("--checks", checks, "Comma list of unimodal, tail_peaked, log_concave, decomposition, monotonicity");
  scan->add_option("--checkpoint", checkpoint, "Resumable progress file");
  scan->add_option("--max-graphs", max_graphs, "Stop after this many graphs");

  std::string only;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", only, "Comma list of criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    print_error(err, json, "UsageError", e.what());
    return kExitUsage;
  }

  EngineOptions opts;
  opts.max_order = max_n;

  try {
    if (compute->parsed()) return cmd_compute(load_graph(src), opts, json, out);
    if (rc->parsed()) return cmd_rc(load_graph(src), set_text, json, out);
    if (decompose->parsed()) return cmd_decompose(load_graph(src), edge_text, opts, json, out);
    if (fam->parsed()) return cmd_family(family_spec(kind, fam_n, fam_m), opts, json, out);
    if (scan->parsed()) {
      ScanConfig config;
      config.n = scan_n;
      config.mode = mode == "random" ? ScanMode::Random : ScanMode::Exhaustive;
      config.sample_count = samples;
      config.seed = seed;
      if (!cls.empty()) {
        config.class_filter = parse_closure_class(cls);
        if (!config.class_filter) throw UsageError("unknown class '" + cls + "'");
      }
      for (const auto& name : split_commas(checks)) {
        const auto c = parse_check(name);
        if (!c) throw UsageError("unknown check '" + name + "'");
        config.checks.push_back(*c);
      }
      if (max_graphs > 0) config.max_graphs = max_graphs;
      config.engine = opts;
      std::optional<std::filesystem::path> path;
      if (!checkpoint.empty()) path = checkpoint;
      const auto summary = run_scan(config, out, path);
      return summary.theorem_violation(config) ? kExitAssertion : kExitOk;
    }
    if (verify->parsed()) {
      std::vector<int> ids;
      for (const auto& id : split_commas(only)) ids.push_back(std::stoi(id));
      bool all = true;
      for (const auto& r : run_acceptance(ids)) {
        all = all && r.passed;
        if (json) {
          out << Json{{"format", kJsonFormat}, {"id", r.id},           {"name", r.name},
                      {"passed", r.passed},   {"seconds", r.seconds}, {"detail", r.detail}}
                     .dump()
              << '\n';
        } else {
          out << format_result(r) << '\n';
        }
      }
      return all ? kExitOk : kExitAssertion;
    }
  } catch (const ParseError& e) {
    print_error(err, json, to_string(e.kind()), e.what(), e.line());
    return kExitUsage;
  } catch (const Error& e) {
    print_error(err, json, to_string(e.kind()), e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    print_error(err, json, "UsageError", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    print_error(err, json, "UsageError", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    print_error(err, json, "InternalError", e.what());
    return kExitAssertion;
  }
  return kExitUsage;
}

}  // namespace anum
