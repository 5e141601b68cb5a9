#include "eulermin/report.hpp"

#include <charconv>
#include <sstream>

#include "eulermin/error.hpp"

namespace eulermin {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int to_int(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::Parse, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string m2_monomial(const Monomial& m) {
  std::string out;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (m[e] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t_" + std::to_string(e + 1);
    if (m[e] > 1) out += "^" + std::to_string(m[e]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

EdgeSet parse_edge_set(const Graph& g, std::string_view text) {
  EdgeSet out;
  if (text.empty()) return out;
  for (auto token : split(text, ',')) {
    auto dash = token.find('-');
    if (dash == std::string_view::npos) throw Error(ErrorKind::Parse, "edge token '" + std::string(token) + "' is not u-v");
    int u = to_int(token.substr(0, dash));
    int v = to_int(token.substr(dash + 1));
    auto e = g.find_edge(u, v);
    if (!e) throw Error(ErrorKind::Parse, "no edge " + std::string(token) + " in graph");
    out |= EdgeSet::single(*e);
  }
  return out;
}

std::string format_edge_set(const Graph& g, EdgeSet j) {
  std::string out;
  j.for_each([&](int e) {
    if (!out.empty()) out += ",";
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  });
  return out;
}

TPPair parse_tp_pair(const Graph& g, std::string_view vertices, int parity) {
  if (parity != 0 && parity != 1) throw Error(ErrorKind::Parse, "parity must be 0 or 1");
  TPPair pair{VertexSet{}, parity};
  if (vertices.empty()) return pair;
  for (auto token : split(vertices, ',')) {
    int v = to_int(token);
    if (v < 1 || v > g.vertex_count()) throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " out of range");
    pair.t ^= VertexSet::single(v);
  }
  return pair;
}

nlohmann::json generating_set_json(const Graph& g, const GeneratingSet& gens) {
  nlohmann::json doc;
  doc["schema"] = "eulermin.gens";
  doc["schema_version"] = kSchemaVersion;
  const auto& base = g.edge(gens.base_edge);
  doc["base_edge"] = {base.u, base.v};
  doc["squares"] = nlohmann::json::array();
  for (const auto& b : gens.square_binomials) doc["squares"].push_back(format_binomial(g, b));
  doc["joins"] = nlohmann::json::array();
  for (const auto& j : gens.join_binomials) {
    doc["joins"].push_back({{"T", j.pair.t.vertices()}, {"p", j.pair.parity}, {"binomial", format_binomial(g, j.binomial)}});
  }
  doc["degrees"] = nlohmann::json::object();
  for (auto [deg, count] : gens.degrees) doc["degrees"][std::to_string(deg)] = count;
  return doc;
}

std::string generating_set_text(const Graph& g, const GeneratingSet& gens) {
  std::ostringstream out;
  out << "degrees:";
  for (auto [deg, count] : gens.degrees) out << " " << deg << ":" << count;
  out << "\nmax degree: " << gens.degrees.rbegin()->first << "\n";
  out << "base edge: " << g.edge_label(gens.base_edge) << "\n";
  for (const auto& b : gens.square_binomials) out << format_binomial(g, b) << "\n";
  for (const auto& j : gens.join_binomials) out << format_binomial(g, j.binomial) << "    # " << to_string(j.pair) << "\n";
  return out.str();
}

nlohmann::json join_classes_json(const Graph& g, const JoinClasses& jc) {
  nlohmann::json doc;
  doc["schema"] = "eulermin.joins";
  doc["schema_version"] = kSchemaVersion;
  doc["T"] = jc.pair.t.vertices();
  doc["p"] = jc.pair.parity;
  doc["min_card"] = jc.min_card;
  doc["min_joins"] = nlohmann::json::array();
  for (EdgeSet j : jc.all_min_joins) doc["min_joins"].push_back(format_edge_set(g, j));
  doc["classes"] = nlohmann::json::array();
  for (const auto& cls : jc.classes) {
    auto arr = nlohmann::json::array();
    for (EdgeSet j : cls) arr.push_back(format_edge_set(g, j));
    doc["classes"].push_back(arr);
  }
  doc["anchor"] = format_edge_set(g, jc.anchor);
  return doc;
}

std::string macaulay2_script(const Graph& g, const GeneratingSet& gens) {
  const int n = g.vertex_count();
  const int s = g.edge_count();
  std::ostringstream out;
  out << "-- eulermin cross-check script\n";
  for (int e = 0; e < s; ++e) out << "-- t_" << e + 1 << " = edge " << g.edge_label(e) << "\n";
  out << "S = QQ[x_1..x_" << n << "];\n";
  out << "R = QQ[t_1..t_" << s << "];\n";
  out << "phi = map(S, R, {";
  for (int e = 0; e < s; ++e) {
    out << (e ? ", " : "") << "x_" << g.edge(e).u << "*x_" << g.edge(e).v;
  }
  out << "});\n";
  out << "Q = ideal(apply(2.." << n << ", i -> x_1^2 - x_i^2));\n";
  out << "IG = preimage(phi, Q);\n";
  out << "G = ideal(";
  bool first = true;
  for (const auto& b : gens.all()) {
    out << (first ? "" : ",\n  ") << m2_monomial(b.lhs()) << " - " << m2_monomial(b.rhs());
    first = false;
  }
  out << ");\n";
  out << "assert(IG == G);\n";
  out << "assert(numgens G == " << gens.size() << ");\n";
  out << "assert(sort apply(flatten entries mingens IG, f -> first degree f) == {";
  first = true;
  for (auto [deg, count] : gens.degrees) {
    for (int i = 0; i < count; ++i) {
      out << (first ? "" : ",") << deg;
      first = false;
    }
  }
  out << "});\n";
  out << "print \"eulermin: generating set confirmed\";\n";
  return out.str();
}

std::string dot_graph(const Graph& g, EdgeSet highlight, std::string_view title) {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n  node [shape=circle];\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (highlight.contains(e)) out << " [color=red, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace eulermin
