#include "eulermin/chords.hpp"

#include <algorithm>
#include <bit>

#include "eulermin/error.hpp"

namespace eulermin {

namespace {

void require_even_eulerian(const Graph& g, EdgeSet c) {
  if (c.empty() || c.size() % 2 != 0 || !is_eulerian(g, c)) {
    throw Error(ErrorKind::Precondition, "set must be a nonempty even-cardinality Eulerian set");
  }
}

}  // namespace

std::optional<EvenChordWitness> is_even_chord(const Graph& g, EdgeSet c, int ell) {
  if (ell < 0 || ell >= g.edge_count()) throw Error(ErrorKind::Precondition, "edge index out of range");
  require_even_eulerian(g, c);
  if (c.contains(ell)) throw Error(ErrorKind::Precondition, "candidate chord lies in the set");

  // C1 must lie in c + ell and contain ell; then C2 = c Δ C1 meets C1 in {ell}.
  const EdgeSet chord = EdgeSet::single(ell);
  const auto basis = cycle_space_basis(g, c | chord);
  std::optional<EvenChordWitness> best;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  EdgeSet current;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (!current.contains(ell) || current.size() % 2 != 0) continue;
    EdgeSet other = c ^ current;
    if (!best || std::pair(current.size(), current) < std::pair(best->c1.size(), best->c1)) {
      best = EvenChordWitness{ell, current, other};
    }
  }
  return best;
}

std::vector<EvenChordWitness> even_chords(const Graph& g, EdgeSet c) {
  require_even_eulerian(g, c);
  std::vector<EvenChordWitness> out;
  const VertexSet on_c = g.vertices_of(c);
  (g.all_edges() - c).for_each([&](int e) {
    // An edge leaving the vertices of c lies on no cycle inside c + e.
    if ((g.endpoints(e) & on_c) != g.endpoints(e)) return;
    if (auto w = is_even_chord(g, c, e)) out.push_back(*w);
  });
  return out;
}

int degree_bound(const Graph& g) {
  if (g.edge_count() < 2) throw Error(ErrorKind::Precondition, "degree bound needs at least 2 edges");
  const auto& even = g.even_eulerian_sets();
  const auto count = static_cast<std::int64_t>(even.size());
  int best = 2;
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (std::int64_t i = 0; i < count; ++i) {
    EdgeSet c = even[static_cast<std::size_t>(i)];
    if (c.empty() || c.size() / 2 <= best) continue;
    EulerianTag tag = classify_eulerian(g, c).tag;
    if (tag != EulerianTag::EvenCycle && tag != EulerianTag::TwoOddCyclesShared0 &&
        tag != EulerianTag::TwoOddCyclesShared1) {
      continue;
    }
    if (even_chords(g, c).empty()) best = std::max(best, c.size() / 2);
  }
  return best;
}

bool is_bipartite_chordal(const Graph& g) {
  if (!g.is_bipartite()) throw Error(ErrorKind::Precondition, "graph is not bipartite");
  for (EdgeSet c : g.even_eulerian_sets()) {
    if (c.size() < 6) continue;
    if (classify_eulerian(g, c).tag != EulerianTag::EvenCycle) continue;
    const VertexSet on_c = g.vertices_of(c);
    bool has_chord = false;
    (g.all_edges() - c).for_each([&](int e) {
      if ((g.endpoints(e) & on_c) == g.endpoints(e)) has_chord = true;
    });
    if (!has_chord) return false;
  }
  return true;
}

}  // namespace eulermin
