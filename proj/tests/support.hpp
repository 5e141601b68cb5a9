#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "eulermin/graph.hpp"
#include "eulermin/report.hpp"

namespace eulermin::test {

inline Graph fixture(const std::string& name) {
  return load_graph(std::string(EULERMIN_FIXTURE_DIR) + "/" + name + ".g");
}

inline EdgeSet edges(const Graph& g, const std::string& text) { return parse_edge_set(g, text); }

// Random simple graph with at least two edges. With `bipartite`, edges only
// run between the two halves of the vertex range.
inline Graph random_graph(std::mt19937_64& rng, int max_vertices, int max_edges, bool bipartite = false) {
  std::uniform_int_distribution<int> vert(3, max_vertices);
  while (true) {
    const int n = vert(rng);
    std::vector<Edge> pool;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (bipartite && ((u <= n / 2) == (v <= n / 2))) continue;
        pool.push_back({u, v});
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<int> count(2, std::min<int>(max_edges, static_cast<int>(pool.size())));
    if (pool.size() < 2) continue;
    pool.resize(static_cast<std::size_t>(count(rng)));
    return Graph(n, pool);
  }
}

inline EdgeSet random_subset(std::mt19937_64& rng, const Graph& g) {
  return EdgeSet(rng()) & g.all_edges();
}

}  // namespace eulermin::test
