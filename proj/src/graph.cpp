#include "eulermin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <queue>
#include <sstream>

#include "json.hpp"

#include "eulermin/error.hpp"
#include "eulermin/kernels.hpp"

namespace eulermin {

struct Graph::Lazy {
  std::once_flag once;
  std::vector<EdgeSet> even_sets;
};

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("EULERMIN_MAX_EDGES"); raw != nullptr && *raw != '\0') {
    int value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::char_traits<char>::length(raw), value);
    if (ec != std::errc{} || *ptr != '\0' || value <= 0 || value > Graph::kMaxEdges) {
      throw Error(ErrorKind::Parse, "EULERMIN_MAX_EDGES must be an integer in 1..64");
    }
    limits.max_subset_edges = value;
  }
  return limits;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, Limits limits)
    : n_(vertex_count), edges_(std::move(edges)), limits_(limits), lazy_(std::make_shared<Lazy>()) {
  if (n_ < 1) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  if (n_ > kMaxVertices) throw Error(ErrorKind::CapExceeded, "more than 64 vertices are not supported");
  if (edges_.empty()) throw Error(ErrorKind::InvalidGraph, "graph needs at least one edge");
  if (edge_count() > kMaxEdges) throw Error(ErrorKind::CapExceeded, "more than 64 edges are not supported");

  incident_.assign(static_cast<std::size_t>(n_), EdgeSet{});
  endpoints_.reserve(edges_.size());
  for (int i = 0; i < edge_count(); ++i) {
    auto& e = edges_[static_cast<std::size_t>(i)];
    if (e.u < 1 || e.v < 1) throw Error(ErrorKind::InvalidGraph, "vertex index must be >= 1");
    if (e.u > n_ || e.v > n_) throw Error(ErrorKind::InvalidGraph, "vertex index exceeds vertex count");
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "loop edge at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    VertexSet ends = VertexSet::single(e.u) | VertexSet::single(e.v);
    if (std::find(endpoints_.begin(), endpoints_.end(), ends) != endpoints_.end()) {
      throw Error(ErrorKind::InvalidGraph, "duplicate edge " + edge_label(i));
    }
    endpoints_.push_back(ends);
    incident_[static_cast<std::size_t>(e.u - 1)] |= EdgeSet::single(i);
    incident_[static_cast<std::size_t>(e.v - 1)] |= EdgeSet::single(i);
  }

  // BFS spanning forest: components, 2-colouring, root paths, fundamental cycles.
  component_.assign(static_cast<std::size_t>(n_), -1);
  color_.assign(static_cast<std::size_t>(n_), 0);
  root_path_.assign(static_cast<std::size_t>(n_), EdgeSet{});
  EdgeSet tree;
  for (int root = 1; root <= n_; ++root) {
    if (component_[static_cast<std::size_t>(root - 1)] >= 0) continue;
    const int comp = static_cast<int>(component_vertices_.size());
    VertexSet members;
    std::queue<int> frontier;
    frontier.push(root);
    component_[static_cast<std::size_t>(root - 1)] = comp;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      members |= VertexSet::single(u);
      incident(u).for_each([&](int e) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        int w = ed.u == u ? ed.v : ed.u;
        if (component_[static_cast<std::size_t>(w - 1)] >= 0) return;
        component_[static_cast<std::size_t>(w - 1)] = comp;
        color_[static_cast<std::size_t>(w - 1)] = 1 - color_[static_cast<std::size_t>(u - 1)];
        root_path_[static_cast<std::size_t>(w - 1)] = root_path_[static_cast<std::size_t>(u - 1)] ^ EdgeSet::single(e);
        tree |= EdgeSet::single(e);
        frontier.push(w);
      });
    }
    component_vertices_.push_back(members);
  }
  (all_edges() - tree).for_each([&](int e) {
    const auto& ed = edges_[static_cast<std::size_t>(e)];
    EdgeSet cycle = root_path(ed.u) ^ root_path(ed.v) ^ EdgeSet::single(e);
    basis_.push_back(cycle);
    if (!odd_cycle_ && cycle.size() % 2 == 1) odd_cycle_ = cycle;
  });
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return std::nullopt;
  EdgeSet common = incident(u) & incident(v);
  if (common.empty()) return std::nullopt;
  return common.lowest();
}

std::optional<VertexSet> Graph::color_class() const {
  if (!is_bipartite()) return std::nullopt;
  VertexSet ones;
  for (int v = 1; v <= n_; ++v) {
    if (color_[static_cast<std::size_t>(v - 1)] == 1) ones |= VertexSet::single(v);
  }
  return ones;
}

const std::vector<EdgeSet>& Graph::even_eulerian_sets() const {
  if (cycle_space_dim() > limits_.max_cycle_dim) {
    throw Error(ErrorKind::CapExceeded, "cycle space dimension " + std::to_string(cycle_space_dim()) +
                                            " exceeds cap " + std::to_string(limits_.max_cycle_dim));
  }
  std::call_once(lazy_->once, [&] { lazy_->even_sets = kernels::span_parallel(basis_, kernels::Parity::Even); });
  return lazy_->even_sets;
}

std::vector<std::vector<int>> Graph::incidence_matrix() const {
  std::vector<std::vector<int>> b(static_cast<std::size_t>(n_), std::vector<int>(edges_.size(), 0));
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    b[static_cast<std::size_t>(edges_[j].u - 1)][j] = 1;
    b[static_cast<std::size_t>(edges_[j].v - 1)][j] = 1;
  }
  return b;
}

std::string Graph::edge_label(int edge) const {
  const auto& e = edges_.at(static_cast<std::size_t>(edge));
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

Graph build(int declared, std::vector<Edge> edges, Limits limits) {
  int n = declared;
  for (const auto& e : edges) {
    if (e.u < 1 || e.v < 1) throw Error(ErrorKind::InvalidGraph, "vertex index must be >= 1");
    if (declared == 0) n = std::max({n, e.u, e.v});
  }
  return Graph(n, std::move(edges), limits);
}

Graph parse_json(std::string_view text, Limits limits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON graph: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorKind::Parse, "JSON graph needs an \"edges\" array");
  }
  int declared = 0;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_number_integer()) throw Error(ErrorKind::Parse, "\"vertices\" must be an integer");
    declared = doc["vertices"].get<int>();
  }
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw Error(ErrorKind::Parse, "each edge must be a pair of integers");
    }
    edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return build(declared, std::move(edges), limits);
}

}  // namespace

Graph parse_graph(std::string_view text, Limits limits) {
  if (auto t = trim(text); !t.empty() && t.front() == '{') return parse_json(t, limits);

  int declared = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (tokens[0] == "v") {
      if (tokens.size() != 2) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'v <n>'");
      declared = parse_int(tokens[1], line_no);
      if (declared < 1) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": vertex count must be positive");
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      edges.push_back({parse_int(tokens[1], line_no), parse_int(tokens[2], line_no)});
    } else if (tokens.size() == 2) {
      edges.push_back({parse_int(tokens[0], line_no), parse_int(tokens[1], line_no)});
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": malformed line '" + std::string(line) + "'");
    }
  }
  if (edges.empty()) throw Error(ErrorKind::Parse, "graph file contains no edges");
  return build(declared, std::move(edges), limits);
}

Graph load_graph(const std::string& path, Limits limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), limits);
}

std::string format_graph(const Graph& g) {
  std::string out = "v " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

int degree_in(const Graph& g, EdgeSet j, int vertex) {
  if (vertex < 1 || vertex > g.vertex_count()) {
    throw Error(ErrorKind::Precondition, "vertex " + std::to_string(vertex) + " out of range");
  }
  return (j & g.incident(vertex)).size();
}

bool is_eulerian(const Graph& g, EdgeSet c) { return g.odd_vertices(c).empty(); }

std::vector<EdgeSet> cycle_space_basis(const Graph& g) { return g.cycle_basis(); }

std::vector<EdgeSet> cycle_space_basis(const Graph& g, EdgeSet within) {
  // Union-find over vertices; an edge closing a cycle contributes the
  // fundamental cycle through the forest built so far.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count() + 1));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  EdgeSet forest;
  std::vector<int> closing;
  within.for_each([&](int e) {
    const auto& ed = g.edge(e);
    int a = find(ed.u), b = find(ed.v);
    if (a == b) {
      closing.push_back(e);
    } else {
      parent[static_cast<std::size_t>(a)] = b;
      forest |= EdgeSet::single(e);
    }
  });
  // Tree path between the endpoints: peel leaves of forest + edge until only
  // the cycle remains.
  std::vector<EdgeSet> basis;
  for (int e : closing) {
    EdgeSet cycle = forest | EdgeSet::single(e);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 1; v <= g.vertex_count(); ++v) {
        EdgeSet at = cycle & g.incident(v);
        if (at.size() == 1) {
          cycle = cycle - at;
          changed = true;
        }
      }
    }
    basis.push_back(cycle);
  }
  return basis;
}

void for_each_eulerian_even(const Graph& g, const std::function<void(EdgeSet)>& visit) {
  if (g.cycle_space_dim() > g.limits().max_cycle_dim) {
    throw Error(ErrorKind::CapExceeded, "cycle space dimension exceeds cap");
  }
  const auto& basis = g.cycle_basis();
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  EdgeSet current;
  if (current.size() % 2 == 0) visit(current);
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (current.size() % 2 == 0) visit(current);
  }
}

std::vector<EdgeSet> enumerate_eulerian_even(const Graph& g) { return g.even_eulerian_sets(); }

namespace {

// Edges of the closed walk from `start` that leaves along `first`, following
// degree-2 vertices until it returns to `start`.
EdgeSet trace_loop(const Graph& g, EdgeSet c, int start, int first) {
  EdgeSet loop = EdgeSet::single(first);
  int edge = first;
  int at = g.edge(first).u == start ? g.edge(first).v : g.edge(first).u;
  while (at != start) {
    EdgeSet next = (c & g.incident(at)) - EdgeSet::single(edge);
    edge = next.lowest();
    loop |= EdgeSet::single(edge);
    at = g.edge(edge).u == at ? g.edge(edge).v : g.edge(edge).u;
  }
  return loop;
}

}  // namespace

EulerianClass classify_eulerian(const Graph& g, EdgeSet c) {
  if (!is_eulerian(g, c)) return {EulerianTag::NotEulerian, {}};
  if (c.empty()) return {EulerianTag::OtherEulerian, {}};

  int degree_four = 0;
  int hub = 0;
  bool other_degree = false;
  VertexSet touched = g.vertices_of(c);
  for (int v : touched.vertices()) {
    int d = degree_in(g, c, v);
    if (d == 4) {
      ++degree_four;
      hub = v;
    } else if (d != 2) {
      other_degree = true;
    }
  }
  if (other_degree || degree_four > 1) return {EulerianTag::OtherEulerian, {}};

  if (degree_four == 1) {
    EdgeSet first = trace_loop(g, c, hub, (c & g.incident(hub)).lowest());
    EdgeSet second = c - first;
    const bool one_loop = trace_loop(g, second, hub, (second & g.incident(hub)).lowest()) == second;
    if (one_loop && first.size() % 2 == 1 && second.size() % 2 == 1) {
      return {EulerianTag::TwoOddCyclesShared1, {std::min(first, second), std::max(first, second)}};
    }
    return {EulerianTag::OtherEulerian, {}};
  }

  // 2-regular: a disjoint union of cycles.
  int start = g.edge(c.lowest()).u;
  EdgeSet first = trace_loop(g, c, start, c.lowest());
  EdgeSet rest = c - first;
  if (rest.empty()) {
    if (first.size() % 2 == 0) return {EulerianTag::EvenCycle, {first}};
    return {EulerianTag::OtherEulerian, {}};
  }
  EdgeSet second = trace_loop(g, rest, g.edge(rest.lowest()).u, rest.lowest());
  if (second == rest && first.size() % 2 == 1 && second.size() % 2 == 1) {
    return {EulerianTag::TwoOddCyclesShared0, {std::min(first, second), std::max(first, second)}};
  }
  return {EulerianTag::OtherEulerian, {}};
}

const char* to_string(EulerianTag tag) {
  switch (tag) {
    case EulerianTag::EvenCycle: return "EvenCycle";
    case EulerianTag::TwoOddCyclesShared0: return "TwoOddCyclesShared0";
    case EulerianTag::TwoOddCyclesShared1: return "TwoOddCyclesShared1";
    case EulerianTag::OtherEulerian: return "OtherEulerian";
    case EulerianTag::NotEulerian: return "NotEulerian";
  }
  return "?";
}

}  // namespace eulermin
