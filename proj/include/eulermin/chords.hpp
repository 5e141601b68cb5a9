#pragma once

#include <optional>
#include <vector>

#include "eulermin/edge_set.hpp"
#include "eulermin/graph.hpp"

namespace eulermin {

// c1 ∩ c2 = {chord}, c1 Δ c2 = the queried set, both even-cardinality Eulerian.
struct EvenChordWitness {
  int chord = -1;
  EdgeSet c1;
  EdgeSet c2;
};

// c must be a nonempty even-cardinality Eulerian set and ell ∉ c. Among valid
// splits the one with the smaller |c1| (then smaller mask) is returned.
std::optional<EvenChordWitness> is_even_chord(const Graph& g, EdgeSet c, int ell);
std::vector<EvenChordWitness> even_chords(const Graph& g, EdgeSet c);

// Half the largest even cycle, or pair of odd cycles sharing at most one
// vertex, that has no even-chord; 2 when no such set exists.
int degree_bound(const Graph& g);

// Bipartite graphs only: every cycle longer than 4 has a chord.
bool is_bipartite_chordal(const Graph& g);

}  // namespace eulermin
