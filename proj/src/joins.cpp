#include "eulermin/joins.hpp"

#include <algorithm>
#include <numeric>

#include "eulermin/error.hpp"
#include "eulermin/kernels.hpp"

namespace eulermin {

std::string to_string(const TPPair& pair) {
  std::string out = "({";
  bool first = true;
  for (int v : pair.t.vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}," + std::to_string(pair.parity) + ")";
  return out;
}

int JoinClasses::class_of(EdgeSet join) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].begin(), classes[i].end(), join)) return static_cast<int>(i);
  }
  return -1;
}

TPPair classify_join(const Graph& g, EdgeSet j) { return {g.odd_vertices(j), j.size() % 2}; }

std::optional<EdgeSet> find_join(const Graph& g, const TPPair& pair) {
  if (pair.parity != 0 && pair.parity != 1) return std::nullopt;
  const std::uint64_t in_range = g.vertex_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  if ((pair.t.bits() & ~in_range) != 0) return std::nullopt;
  for (int c = 0; c < g.component_count(); ++c) {
    if ((pair.t & g.component_vertices(c)).size() % 2 != 0) return std::nullopt;
  }
  // Root paths of an even number of vertices per component cancel at the root.
  EdgeSet join;
  for (int v : pair.t.vertices()) join ^= g.root_path(v);
  if (join.size() % 2 != pair.parity) {
    if (!g.odd_cycle()) return std::nullopt;
    join ^= *g.odd_cycle();
  }
  return join;
}

bool join_exists(const Graph& g, const TPPair& pair) { return find_join(g, pair).has_value(); }

namespace {

kernels::MinScan scan_min_joins(const Graph& g, const TPPair& pair) {
  auto seed = find_join(g, pair);
  if (!seed) throw Error(ErrorKind::NoJoin, "no (T,p)-join exists for " + to_string(pair));
  // Every (T,p)-join is seed ^ C for an even-cardinality Eulerian C.
  return kernels::min_coset_parallel(*seed, g.even_eulerian_sets());
}

}  // namespace

int min_join_cardinality(const Graph& g, const TPPair& pair) { return scan_min_joins(g, pair).min_size; }

std::vector<EdgeSet> enumerate_min_joins(const Graph& g, const TPPair& pair) {
  return scan_min_joins(g, pair).sets;
}

bool is_min_join(const Graph& g, EdgeSet j) {
  const auto& even = g.even_eulerian_sets();
  const auto count = static_cast<std::int64_t>(even.size());
  bool minimal = true;
#pragma omp parallel for reduction(&& : minimal)
  for (std::int64_t i = 0; i < count; ++i) {
    EdgeSet c = even[static_cast<std::size_t>(i)];
    minimal = minimal && 2 * (j & c).size() <= c.size();
  }
  return minimal;
}

std::vector<std::vector<EdgeSet>> equivalence_classes(const Graph& g, const std::vector<EdgeSet>& joins) {
  if (joins.empty()) return {};
  const TPPair pair = classify_join(g, joins.front());
  for (EdgeSet j : joins) {
    if (classify_join(g, j) != pair) {
      throw Error(ErrorKind::Precondition, "joins do not share a single (T,p) pair");
    }
  }
  std::vector<std::size_t> parent(joins.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < joins.size(); ++a) {
    for (std::size_t b = a + 1; b < joins.size(); ++b) {
      if (joins[a].intersects(joins[b])) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<EdgeSet>> classes;
  std::vector<std::ptrdiff_t> slot(joins.size(), -1);
  std::vector<std::size_t> order(joins.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return joins[a] < joins[b]; });
  for (std::size_t idx : order) {
    std::size_t root = find(idx);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[root])].push_back(joins[idx]);
  }
  return classes;
}

JoinClasses build_join_classes(const Graph& g, const TPPair& pair) {
  auto scan = scan_min_joins(g, pair);
  JoinClasses out;
  out.pair = pair;
  out.min_card = scan.min_size;
  out.all_min_joins = std::move(scan.sets);
  out.classes = equivalence_classes(g, out.all_min_joins);
  for (const auto& cls : out.classes) out.representatives.push_back(cls.front());
  out.anchor = out.representatives.front();
  return out;
}

}  // namespace eulermin
