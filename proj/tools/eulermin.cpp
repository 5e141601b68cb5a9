// eulermin: command-line front end.
//
// Exit codes: 0 ok, 1 negative verdict (member, verify), 2 minimality failure
// (verify), 64 usage, 65 unreadable or invalid input, 70 cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eulermin/chords.hpp"
#include "eulermin/error.hpp"
#include "eulermin/ideal.hpp"
#include "eulermin/joins.hpp"
#include "eulermin/kernels.hpp"
#include "eulermin/report.hpp"
#include "eulermin/verify.hpp"
#include "json.hpp"

using namespace eulermin;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitCap = 70;

struct RunConfig {
  std::string graph_path;
  std::string format = "text";
  std::optional<int> max_edges;
  int max_fiber_degree = 0;  // 0: max generating degree + 2
  std::optional<std::uint64_t> seed;
  std::string base_edge;
  std::string t_set;
  int parity = -1;
  std::string edge_set;
  std::string binomial;
  std::string generators_path;
  std::string output_path;
  bool classify = false;
  bool all_parities = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not available for this subcommand");
}

Graph load(const RunConfig& cfg) {
  Limits limits = Limits::from_env();
  if (cfg.max_edges) limits.max_subset_edges = *cfg.max_edges;
  Graph g = load_graph(cfg.graph_path, limits);
  if (g.edge_count() > limits.max_subset_edges) {
    throw Error(ErrorKind::CapExceeded, "graph has " + std::to_string(g.edge_count()) + " edges, cap is " +
                                            std::to_string(limits.max_subset_edges));
  }
  return g;
}

json envelope(const char* schema) {
  return {{"schema", schema}, {"schema_version", kSchemaVersion}};
}

json degrees_json(const std::map<int, int>& degrees) {
  json out = json::object();
  for (auto [d, count] : degrees) out[std::to_string(d)] = count;
  return out;
}

std::string tp_text(const TPPair& pair) { return to_string(pair); }

std::vector<Binomial> read_generators(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::vector<Binomial> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_binomial(g, line));
  }
  return out;
}

int cmd_gens(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "m2", "dot"});
  Graph g = load(cfg);
  if (g.edge_count() < 2) throw Error(ErrorKind::Precondition, "trivial ideal: the graph has only one edge");
  std::optional<int> base;
  if (!cfg.base_edge.empty()) {
    EdgeSet e = parse_edge_set(g, cfg.base_edge);
    if (e.size() != 1) throw UsageError("--base-edge takes exactly one edge");
    base = e.lowest();
  }
  const GeneratingSet gens = minimal_generating_set(g, base, cfg.seed);
  if (cfg.format == "json") {
    std::cout << generating_set_json(g, gens).dump(2) << "\n";
  } else if (cfg.format == "m2") {
    std::cout << macaulay2_script(g, gens);
  } else if (cfg.format == "dot") {
    EdgeSet joins;
    for (const auto& j : gens.join_binomials) joins |= j.join | j.anchor;
    std::cout << dot_graph(g, joins, "generators");
  } else {
    std::cout << generating_set_text(g, gens);
  }
  return 0;
}

int cmd_maxdeg(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Graph g = load(cfg);
  const auto degrees = generating_degrees(g);
  const int d = degrees.rbegin()->first;
  if (cfg.format == "json") {
    json doc = envelope("eulermin.maxdeg");
    doc["max_degree"] = d;
    doc["degrees"] = degrees_json(degrees);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << d << "\n";
  }
  return 0;
}

int cmd_bound(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Graph g = load(cfg);
  const int bound = degree_bound(g);
  const int d = max_generating_degree(g);
  if (cfg.format == "json") {
    json doc = envelope("eulermin.bound");
    doc["bound"] = bound;
    doc["max_degree"] = d;
    doc["strict"] = d < bound;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << bound << "\n";
    std::cout << "max degree: " << d << "\n";
    std::cout << (d < bound ? "strict inequality" : "equality") << "\n";
  }
  return 0;
}

int cmd_joins(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "dot"});
  Graph g = load(cfg);
  if (cfg.parity < 0) throw UsageError("--p is required");
  const TPPair pair = parse_tp_pair(g, cfg.t_set, cfg.parity);
  if (!join_exists(g, pair)) {
    if (cfg.format == "json") {
      json doc = envelope("eulermin.joins");
      doc["T"] = pair.t.vertices();
      doc["p"] = pair.parity;
      doc["exists"] = false;
      std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "dot") {
      std::cout << dot_graph(g, {}, "no join " + tp_text(pair));
    } else {
      std::cout << "no (T,p)-join exists for " << tp_text(pair) << "\n";
    }
    return 0;
  }
  const JoinClasses jc = build_join_classes(g, pair);
  if (cfg.format == "json") {
    json doc = join_classes_json(g, jc);
    doc["exists"] = true;
    std::cout << doc.dump(2) << "\n";
  } else if (cfg.format == "dot") {
    std::cout << dot_graph(g, jc.anchor, "anchor of " + tp_text(pair));
  } else {
    std::cout << "pair: " << tp_text(pair) << "\n";
    std::cout << "min cardinality: " << jc.min_card << "\n";
    std::cout << "minimum joins: " << jc.all_min_joins.size() << "\n";
    for (EdgeSet j : jc.all_min_joins) std::cout << "  {" << format_edge_set(g, j) << "}\n";
    std::cout << "classes: " << jc.class_count() << "\n";
    for (int c = 0; c < jc.class_count(); ++c) {
      std::cout << "  class " << c + 1 << ":";
      for (EdgeSet j : jc.classes[static_cast<std::size_t>(c)]) std::cout << " {" << format_edge_set(g, j) << "}";
      std::cout << "\n";
    }
    std::cout << "anchor: {" << format_edge_set(g, jc.anchor) << "}\n";
  }
  return 0;
}

int cmd_eulerian(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Graph g = load(cfg);
  std::vector<EdgeSet> sets;
  if (cfg.all_parities) {
    const auto basis = g.cycle_basis();
    if (g.cycle_space_dim() > g.limits().max_cycle_dim) throw Error(ErrorKind::CapExceeded, "cycle space too large");
    sets = kernels::span_parallel(basis, kernels::Parity::Any);
  } else {
    sets = g.even_eulerian_sets();
  }
  json doc = envelope("eulermin.eulerian");
  doc["sets"] = json::array();
  for (EdgeSet c : sets) {
    if (cfg.format == "json") {
      json entry = {{"edges", format_edge_set(g, c)}, {"size", c.size()}};
      if (cfg.classify) entry["tag"] = to_string(classify_eulerian(g, c).tag);
      doc["sets"].push_back(entry);
      continue;
    }
    std::cout << "{" << format_edge_set(g, c) << "}";
    if (cfg.classify) std::cout << " " << to_string(classify_eulerian(g, c).tag);
    std::cout << "\n";
  }
  if (cfg.format == "json") std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_evenchords(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "dot"});
  Graph g = load(cfg);
  if (cfg.edge_set.empty()) throw UsageError("--set is required");
  const EdgeSet c = parse_edge_set(g, cfg.edge_set);
  const auto witnesses = even_chords(g, c);
  if (cfg.format == "json") {
    json doc = envelope("eulermin.evenchords");
    doc["set"] = format_edge_set(g, c);
    doc["witnesses"] = json::array();
    for (const auto& w : witnesses) {
      doc["witnesses"].push_back({{"chord", g.edge_label(w.chord)},
                                  {"c1", format_edge_set(g, w.c1)},
                                  {"c2", format_edge_set(g, w.c2)}});
    }
    std::cout << doc.dump(2) << "\n";
  } else if (cfg.format == "dot") {
    std::cout << dot_graph(g, c, "even chords");
  } else if (witnesses.empty()) {
    std::cout << "no even-chords\n";
  } else {
    for (const auto& w : witnesses) {
      std::cout << g.edge_label(w.chord) << ": C1 {" << format_edge_set(g, w.c1) << "} C2 {"
                << format_edge_set(g, w.c2) << "}\n";
    }
  }
  return 0;
}

int cmd_member(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Graph g = load(cfg);
  if (cfg.binomial.empty()) throw UsageError("--binomial is required");
  const Binomial b = parse_binomial(g, cfg.binomial);
  const bool member = is_member(g, b);
  const TPPair left = classify_join(g, b.lhs().squarefree_part());
  const TPPair right = classify_join(g, b.rhs().squarefree_part());
  if (cfg.format == "json") {
    json doc = envelope("eulermin.member");
    doc["binomial"] = format_binomial(g, b);
    doc["member"] = member;
    doc["degrees"] = {b.lhs().degree(), b.rhs().degree()};
    doc["lhs"] = {{"T", left.t.vertices()}, {"p", left.parity}};
    doc["rhs"] = {{"T", right.t.vertices()}, {"p", right.parity}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (member ? "member" : "not a member") << "\n";
    std::cout << "degrees: " << b.lhs().degree() << " " << b.rhs().degree() << "\n";
    std::cout << "lhs: " << tp_text(left) << "\n";
    std::cout << "rhs: " << tp_text(right) << "\n";
  }
  return member ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Graph g = load(cfg);
  if (g.edge_count() < 2) throw Error(ErrorKind::Precondition, "trivial ideal: the graph has only one edge");
  std::vector<Binomial> gens;
  if (cfg.generators_path.empty()) {
    gens = minimal_generating_set(g).all();
  } else {
    gens = read_generators(g, cfg.generators_path);
  }
  int max_degree = cfg.max_fiber_degree;
  if (max_degree <= 0) {
    max_degree = 2;
    for (const auto& b : gens) max_degree = std::max(max_degree, b.degree());
    max_degree += 2;
  }

  json doc = envelope("eulermin.verify");
  doc["generators"] = gens.size();
  doc["max_fiber_degree"] = max_degree;
  int code = 0;
  std::string message;

  std::optional<std::string> not_member;
  for (const auto& b : gens) {
    if (!is_member(g, b)) {
      not_member = format_binomial(g, b);
      break;
    }
  }
  GenerationReport gen_report;
  if (!not_member) {
    gen_report = check_decisive_fibers(g, gens);
    if (gen_report.ok) gen_report = check_all_fibers(g, gens, max_degree);
  }
  if (not_member) {
    code = 1;
    message = "not in the ideal: " + *not_member;
  } else if (!gen_report.ok) {
    code = 1;
    message = "disconnected fiber: " + gen_report.detail;
    if (gen_report.disconnected) {
      json members = json::array();
      for (const auto& m : gen_report.disconnected->monomials) members.push_back(format_monomial(g, m));
      doc["fiber"] = members;
    }
  } else {
    const MinimalityReport min_report = check_minimality(g, gens);
    if (!min_report.ok) {
      code = 2;
      message = "removable generator: " + format_binomial(g, gens[*min_report.removable]);
    } else {
      message = "verified minimal generating set";
    }
  }
  doc["status"] = code;
  doc["message"] = message;
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << message << "\n";
    if (doc.contains("fiber")) {
      for (const auto& m : doc["fiber"]) std::cout << "  " << m.get<std::string>() << "\n";
    }
  }
  return code;
}

int cmd_export_m2(const RunConfig& cfg) {
  Graph g = load(cfg);
  if (g.edge_count() < 2) throw Error(ErrorKind::Precondition, "trivial ideal: the graph has only one edge");
  const std::string script = macaulay2_script(g, minimal_generating_set(g));
  if (cfg.output_path.empty()) {
    std::cout << script;
    return 0;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + cfg.output_path);
  out << script;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal generating sets of Eulerian ideals of graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("graph", cfg.graph_path, "graph file (edge list or JSON)")->required();
    if (with_format) {
      sub->add_option("-f,--format", cfg.format, "text, json, m2 or dot")
          ->check(CLI::IsMember({"text", "json", "m2", "dot"}));
    }
    sub->add_option("--max-edges", cfg.max_edges, "edge cap (default EULERMIN_MAX_EDGES or 24)")
        ->check(CLI::Range(1, Graph::kMaxEdges));
  };

  auto* gens = app.add_subcommand("gens", "print a minimal generating set");
  common(gens);
  gens->add_option("--base-edge", cfg.base_edge, "edge u-v for the square differences");
  gens->add_option("--seed", cfg.seed, "draw representatives pseudo-randomly");

  auto* maxdeg = app.add_subcommand("maxdeg", "print the maximal generating degree");
  common(maxdeg);

  auto* bound = app.add_subcommand("bound", "print the even-chord degree bound");
  common(bound);

  auto* joins = app.add_subcommand("joins", "minimum (T,p)-joins and their classes");
  common(joins);
  joins->add_option("--t", cfg.t_set, "comma-separated vertices of T");
  joins->add_option("--p", cfg.parity, "parity 0 or 1")->required()->check(CLI::Range(0, 1));

  auto* eulerian = app.add_subcommand("eulerian", "list Eulerian edge sets");
  common(eulerian);
  eulerian->add_flag("--classify", cfg.classify, "tag each set");
  eulerian->add_flag("--all", cfg.all_parities, "include odd cardinality sets");

  auto* evenchords = app.add_subcommand("evenchords", "even-chords of an Eulerian set");
  common(evenchords);
  evenchords->add_option("--set", cfg.edge_set, "edges u-v,u-v,...")->required();

  auto* member = app.add_subcommand("member", "test ideal membership of a binomial");
  common(member);
  member->add_option("--binomial", cfg.binomial, "e.g. \"t[1,2]*t[3,4] - t[2,3]*t[1,4]\"")->required();

  auto* verify = app.add_subcommand("verify", "check generation and minimality");
  common(verify);
  verify->add_option("--generators", cfg.generators_path, "file with one binomial per line");
  verify->add_option("--max-fiber-degree", cfg.max_fiber_degree, "exhaustive fiber degree")
      ->check(CLI::Range(1, 64));

  auto* export_m2 = app.add_subcommand("export-m2", "write a Macaulay2 cross-check script");
  common(export_m2, false);
  export_m2->add_option("-o,--output", cfg.output_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gens) return cmd_gens(cfg);
    if (*maxdeg) return cmd_maxdeg(cfg);
    if (*bound) return cmd_bound(cfg);
    if (*joins) return cmd_joins(cfg);
    if (*eulerian) return cmd_eulerian(cfg);
    if (*evenchords) return cmd_evenchords(cfg);
    if (*member) return cmd_member(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*export_m2) return cmd_export_m2(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitData;
  }
  return kExitUsage;
}
