#include <random>
#include <set>

#include "doctest.h"
#include "eulermin/chords.hpp"
#include "eulermin/error.hpp"
#include "eulermin/ideal.hpp"
#include "eulermin/joins.hpp"
#include "support.hpp"

using namespace eulermin;
using eulermin::test::edges;
using eulermin::test::fixture;

namespace {

void check_witness(const Graph& g, EdgeSet c, const EvenChordWitness& w) {
  CHECK((w.c1 & w.c2) == EdgeSet::single(w.chord));
  CHECK((w.c1 ^ w.c2) == c);
  for (EdgeSet part : {w.c1, w.c2}) {
    CHECK(is_eulerian(g, part));
    CHECK(part.size() % 2 == 0);
    CHECK(part.size() >= 4);
  }
}

}  // namespace

TEST_CASE("is_even_chord examples") {
  Graph fig1 = fixture("fig1");
  EdgeSet hex = edges(fig1, "1-2,2-3,3-4,4-5,5-6,1-6");
  auto w = is_even_chord(fig1, hex, *fig1.find_edge(2, 5));
  REQUIRE(w);
  check_witness(fig1, hex, *w);
  CHECK(w->c1.size() == 4);
  CHECK(w->c2.size() == 4);

  Graph fig3 = fixture("fig3");
  EdgeSet outer = edges(fig3, "1-2,2-3,3-4,4-5,5-6,1-6");
  for (int e = 0; e < fig3.edge_count(); ++e) {
    if (!outer.contains(e)) CHECK(!is_even_chord(fig3, outer, e));
  }
  CHECK(even_chords(fig3, outer).empty());

  CHECK_THROWS_AS(is_even_chord(fig1, hex, 0), Error);
  CHECK_THROWS_AS(is_even_chord(fig1, edges(fig1, "1-2,2-3"), 6), Error);
  CHECK_THROWS_AS(is_even_chord(fig1, EdgeSet{}, 6), Error);
}

TEST_CASE("even chords in the two-triangle and pentagon graph") {
  Graph g = fixture("fig2");
  EdgeSet c = edges(g, "6-7,7-8,8-9,9-10,6-10,1-2,1-3,2-3");
  auto w = is_even_chord(g, c, *g.find_edge(6, 9));
  REQUIRE(w);
  check_witness(g, c, *w);
  CHECK(w->c1 == edges(g, "6-7,7-8,8-9,6-9"));
  CHECK(w->c2 == edges(g, "1-2,1-3,2-3,6-9,6-10,9-10"));

  EdgeSet bowtie = edges(g, "1-2,1-3,2-3,1-4,1-5,4-5");
  auto all = even_chords(g, bowtie);
  REQUIRE(all.size() == 1);
  CHECK(all[0].chord == *g.find_edge(2, 5));
  check_witness(g, bowtie, all[0]);
  std::set<EdgeSet> squares{all[0].c1, all[0].c2};
  CHECK(squares == std::set<EdgeSet>{edges(g, "1-3,2-3,2-5,1-5"), edges(g, "1-4,1-2,2-5,4-5")});

  Graph c4 = fixture("c4");
  CHECK(even_chords(c4, c4.all_edges()).empty());
  CHECK_THROWS_AS(even_chords(c4, edges(c4, "1-2,2-3")), Error);
  Graph apart = parse_graph("e 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\ne 3 4");
  CHECK(even_chords(apart, edges(apart, "1-2,2-3,1-3,4-5,5-6,4-6")).empty());
}

TEST_CASE("even-chord witness invariants and the chord criterion") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 120; ++round) {
    Graph g = test::random_graph(rng, 8, 13, round % 3 == 0);
    for (EdgeSet c : g.even_eulerian_sets()) {
      if (c.empty()) continue;
      auto found = even_chords(g, c);
      for (const auto& w : found) check_witness(g, c, w);
      auto cls = classify_eulerian(g, c);
      if (cls.tag == EulerianTag::TwoOddCyclesShared0) {
        // Chords of either odd cycle are exactly what makes an even-chord.
        bool has_chord = false;
        for (EdgeSet part : cls.parts) {
          VertexSet vs = g.vertices_of(part);
          for (int e = 0; e < g.edge_count(); ++e) {
            if (!c.contains(e) && (g.endpoints(e) & vs) == g.endpoints(e)) has_chord = true;
          }
        }
        CHECK(!found.empty() == has_chord);
      }
      if (g.is_bipartite() && cls.tag == EulerianTag::EvenCycle) {
        VertexSet vs = g.vertices_of(c);
        int chords = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
          if (!c.contains(e) && (g.endpoints(e) & vs) == g.endpoints(e)) ++chords;
        }
        CHECK(static_cast<int>(found.size()) == chords);
      }
    }
  }
}

TEST_CASE("disjoint min joins whose union has an even-chord are equivalent") {
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "c6", "k5", "k33"}) {
    Graph g = fixture(name);
    for (TPPair pair : candidate_pairs(g, CandidateSource::AllEulerian)) {
      auto jc = build_join_classes(g, pair);
      for (EdgeSet j : jc.all_min_joins) {
        for (EdgeSet k : jc.all_min_joins) {
          if (j >= k || j.intersects(k) || (j | k).empty()) continue;
          if (!even_chords(g, j | k).empty()) CHECK(jc.class_of(j) == jc.class_of(k));
        }
      }
    }
  }
}

TEST_CASE("degree_bound") {
  CHECK(degree_bound(fixture("c6")) == 3);
  CHECK(degree_bound(fixture("fig1")) == 2);
  CHECK(degree_bound(fixture("fig3")) == 3);
  CHECK(degree_bound(fixture("triangle")) == 2);
  CHECK_THROWS_AS(degree_bound(fixture("single_edge")), Error);
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "c4", "c6", "c8", "k4", "k5", "k6", "k23", "k33"}) {
    Graph g = fixture(name);
    CHECK(max_generating_degree(g) <= degree_bound(g));
    if (g.is_bipartite()) CHECK(max_generating_degree(g) == degree_bound(g));
  }
  std::mt19937_64 rng(47);
  for (int round = 0; round < 100; ++round) {
    Graph g = test::random_graph(rng, 8, 12, round % 2 == 0);
    const int d = max_generating_degree(g);
    const int bound = degree_bound(g);
    CHECK(d <= bound);
    if (g.is_bipartite()) CHECK(d == bound);
  }
}

TEST_CASE("is_bipartite_chordal") {
  CHECK(is_bipartite_chordal(fixture("fig1")));
  CHECK(!is_bipartite_chordal(fixture("c6")));
  CHECK(is_bipartite_chordal(fixture("k33")));
  CHECK(is_bipartite_chordal(fixture("c4")));
  CHECK_THROWS_AS(is_bipartite_chordal(fixture("k4")), Error);
}
