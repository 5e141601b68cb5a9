#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulermin/edge_set.hpp"

namespace eulermin {

// Enumeration limits. The defaults keep every exhaustive routine at desk scale.
struct Limits {
  int max_subset_edges = 24;  // 2^s scans in the oracles
  int max_cycle_dim = 24;     // 2^dim scans over the cycle space

  // Reads EULERMIN_MAX_EDGES; falls back to the defaults when unset.
  static Limits from_env();
};

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  static constexpr int kMaxEdges = 64;
  static constexpr int kMaxVertices = 64;

  // Validates simplicity and vertex ranges. Edge order is kept as given.
  Graph(int vertex_count, std::vector<Edge> edges, Limits limits = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  std::optional<int> find_edge(int u, int v) const;
  const Limits& limits() const { return limits_; }

  EdgeSet all_edges() const { return EdgeSet::first_n(edge_count()); }
  EdgeSet incident(int vertex) const { return incident_[static_cast<std::size_t>(vertex - 1)]; }
  VertexSet endpoints(int edge) const { return endpoints_[static_cast<std::size_t>(edge)]; }
  const std::vector<VertexSet>& endpoint_masks() const { return endpoints_; }

  // Vertices of odd degree in j.
  VertexSet odd_vertices(EdgeSet j) const {
    VertexSet out;
    j.for_each([&](int e) { out ^= endpoints_[static_cast<std::size_t>(e)]; });
    return out;
  }
  VertexSet vertices_of(EdgeSet j) const {
    VertexSet out;
    j.for_each([&](int e) { out |= endpoints_[static_cast<std::size_t>(e)]; });
    return out;
  }

  int component_count() const { return static_cast<int>(component_vertices_.size()); }
  int component_of(int vertex) const { return component_[static_cast<std::size_t>(vertex - 1)]; }
  VertexSet component_vertices(int component) const {
    return component_vertices_[static_cast<std::size_t>(component)];
  }

  bool is_bipartite() const { return !odd_cycle_.has_value(); }
  // 0/1 colour classes; empty when the graph has an odd cycle.
  std::optional<VertexSet> color_class() const;

  // Edges on the spanning-forest path from the vertex to its component root.
  EdgeSet root_path(int vertex) const { return root_path_[static_cast<std::size_t>(vertex - 1)]; }
  const std::vector<EdgeSet>& cycle_basis() const { return basis_; }
  int cycle_space_dim() const { return static_cast<int>(basis_.size()); }
  // Some odd-cardinality Eulerian set, present iff the graph is not bipartite.
  const std::optional<EdgeSet>& odd_cycle() const { return odd_cycle_; }

  // All even-cardinality Eulerian sets (including the empty set), ascending by
  // mask. Materialized once on first use; throws CapExceeded above max_cycle_dim.
  const std::vector<EdgeSet>& even_eulerian_sets() const;

  // n x s 0/1 matrix, row v-1 is vertex v.
  std::vector<std::vector<int>> incidence_matrix() const;

  // "{u,v}" label of an edge, used in reports.
  std::string edge_label(int edge) const;

 private:
  struct Lazy;

  int n_ = 0;
  std::vector<Edge> edges_;
  Limits limits_;
  std::vector<EdgeSet> incident_;
  std::vector<VertexSet> endpoints_;
  std::vector<int> component_;
  std::vector<VertexSet> component_vertices_;
  std::vector<int> color_;
  std::vector<EdgeSet> root_path_;
  std::vector<EdgeSet> basis_;
  std::optional<EdgeSet> odd_cycle_;
  std::shared_ptr<Lazy> lazy_;
};

// Text edge list ("v n" header, "e u v" or "u v" lines, '#' comments) or the
// JSON form {"vertices": n, "edges": [[u,v],...]}.
Graph parse_graph(std::string_view text, Limits limits = {});
Graph load_graph(const std::string& path, Limits limits = {});
std::string format_graph(const Graph& g);

int degree_in(const Graph& g, EdgeSet j, int vertex);
bool is_eulerian(const Graph& g, EdgeSet c);

// Fundamental cycles of a spanning forest of the subgraph with edge set `within`.
std::vector<EdgeSet> cycle_space_basis(const Graph& g);
std::vector<EdgeSet> cycle_space_basis(const Graph& g, EdgeSet within);

// Streams every even-cardinality Eulerian set in Gray-code order.
void for_each_eulerian_even(const Graph& g, const std::function<void(EdgeSet)>& visit);
std::vector<EdgeSet> enumerate_eulerian_even(const Graph& g);

enum class EulerianTag {
  EvenCycle,
  TwoOddCyclesShared0,
  TwoOddCyclesShared1,
  OtherEulerian,
  NotEulerian,
};

struct EulerianClass {
  EulerianTag tag = EulerianTag::NotEulerian;
  // The cycle itself, or the two odd cycles (lower mask first).
  std::vector<EdgeSet> parts;
};

EulerianClass classify_eulerian(const Graph& g, EdgeSet c);
const char* to_string(EulerianTag tag);

}  // namespace eulermin
