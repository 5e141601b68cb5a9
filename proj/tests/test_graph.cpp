#include <random>
#include <set>

#include "doctest.h"
#include "eulermin/error.hpp"
#include "eulermin/graph.hpp"
#include "eulermin/verify.hpp"
#include "support.hpp"

using namespace eulermin;
using eulermin::test::edges;
using eulermin::test::fixture;

TEST_CASE("parse_graph reads the edge-list grammar") {
  Graph path = parse_graph("e 1 2\ne 2 3");
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);

  Graph fig1 = fixture("fig1");
  CHECK(fig1.vertex_count() == 6);
  CHECK(fig1.edge_count() == 7);
  CHECK(fig1.edge(6) == Edge{2, 5});

  Graph mixed = parse_graph("# comment\nv 5\n1 2\n  e 2 3  \n\n");
  CHECK(mixed.vertex_count() == 5);
  CHECK(mixed.edge_count() == 2);
  CHECK(mixed.component_count() == 3);

  Graph json = parse_graph(R"({"vertices": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})");
  CHECK(json.edge_count() == 4);
  CHECK(json.cycle_space_dim() == 1);
}

TEST_CASE("parse_graph rejects invalid input") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::Parse;
  };
  CHECK(kind_of("e 1 1") == ErrorKind::InvalidGraph);
  CHECK(kind_of("e 1 2\ne 2 1") == ErrorKind::InvalidGraph);
  CHECK(kind_of("e 0 2") == ErrorKind::InvalidGraph);
  CHECK(kind_of("e 1 x") == ErrorKind::Parse);
  CHECK(kind_of("e 1 2 3") == ErrorKind::Parse);
  CHECK(kind_of("hello") == ErrorKind::Parse);
  CHECK(kind_of("v 2\ne 1 3") == ErrorKind::InvalidGraph);
  CHECK(kind_of("# nothing") == ErrorKind::Parse);
  CHECK(kind_of(R"({"edges": [[1]]})") == ErrorKind::Parse);
}

TEST_CASE("format_graph round-trips") {
  Graph g = fixture("fig2");
  Graph back = parse_graph(format_graph(g));
  CHECK(back.edges() == g.edges());
  CHECK(back.vertex_count() == g.vertex_count());
}

TEST_CASE("degree_in") {
  Graph g = fixture("fig1");
  for (int v = 1; v <= 6; ++v) CHECK(degree_in(g, EdgeSet{}, v) == 0);
  EdgeSet j = edges(g, "1-2,1-6,5-6");
  CHECK(degree_in(g, j, 1) == 2);
  CHECK(degree_in(g, j, 2) == 1);
  CHECK(degree_in(g, j, 5) == 1);
  CHECK_THROWS_AS(degree_in(g, j, 7), Error);

  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Graph r = test::random_graph(rng, 9, 16);
    EdgeSet s = test::random_subset(rng, r);
    for (int v = 1; v <= r.vertex_count(); ++v) {
      int scan = 0;
      for (int e = 0; e < r.edge_count(); ++e) {
        if (s.contains(e) && (r.edge(e).u == v || r.edge(e).v == v)) ++scan;
      }
      CHECK(degree_in(r, s, v) == scan);
    }
  }
}

TEST_CASE("cycle_space_basis") {
  CHECK(cycle_space_basis(parse_graph("e 1 2\ne 2 3\ne 2 4")).empty());

  Graph c4 = fixture("c4");
  auto basis = cycle_space_basis(c4);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == c4.all_edges());

  Graph fig1 = fixture("fig1");
  basis = cycle_space_basis(fig1);
  REQUIRE(basis.size() == 2);
  std::set<EdgeSet> span{EdgeSet{}, basis[0], basis[1], basis[0] ^ basis[1]};
  // Brute force: every Eulerian subset of the 7 edges lies in the span.
  std::set<EdgeSet> eulerian;
  for (std::uint64_t m = 0; m < 128; ++m) {
    if (is_eulerian(fig1, EdgeSet(m))) eulerian.insert(EdgeSet(m));
  }
  CHECK(span == eulerian);
  CHECK(eulerian.count(edges(fig1, "1-2,2-5,5-6,1-6")) == 1);
  CHECK(eulerian.count(edges(fig1, "2-3,3-4,4-5,2-5")) == 1);
  CHECK(eulerian.count(edges(fig1, "1-2,2-3,3-4,4-5,5-6,1-6")) == 1);

  // Restricted to a subgraph.
  Graph fig2 = fixture("fig2");
  EdgeSet sub = edges(fig2, "6-7,7-8,8-9,9-10,6-10,6-9");
  auto inner = cycle_space_basis(fig2, sub);
  CHECK(inner.size() == 2);
  for (EdgeSet c : inner) {
    CHECK(c.subset_of(sub));
    CHECK(is_eulerian(fig2, c));
  }

  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    Graph r = test::random_graph(rng, 9, 18);
    CHECK(r.cycle_space_dim() == r.edge_count() - r.vertex_count() + r.component_count());
    for (EdgeSet c : r.cycle_basis()) CHECK(is_eulerian(r, c));
  }
}

TEST_CASE("enumerate_eulerian_even") {
  CHECK(enumerate_eulerian_even(fixture("triangle")) == std::vector<EdgeSet>{EdgeSet{}});

  Graph c4 = fixture("c4");
  CHECK(enumerate_eulerian_even(c4) == std::vector<EdgeSet>{EdgeSet{}, c4.all_edges()});

  Graph fig1 = fixture("fig1");
  auto even = enumerate_eulerian_even(fig1);
  CHECK(even.size() == 4);

  std::vector<EdgeSet> streamed;
  for_each_eulerian_even(fig1, [&](EdgeSet c) { streamed.push_back(c); });
  std::sort(streamed.begin(), streamed.end());
  CHECK(streamed == even);

  Limits tight;
  tight.max_cycle_dim = 1;
  Graph capped(6, fig1.edges(), tight);
  CHECK_THROWS_AS(capped.even_eulerian_sets(), Error);
}

TEST_CASE("Eulerian enumeration properties against the 2^s oracle") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 150; ++round) {
    Graph g = test::random_graph(rng, 8, 12, round % 3 == 0);
    const auto& even = g.even_eulerian_sets();
    std::vector<EdgeSet> oracle_even;
    const auto all = oracle_eulerian_sets(g);
    for (EdgeSet c : all) {
      if (c.size() % 2 == 0) oracle_even.push_back(c);
    }
    REQUIRE(even == oracle_even);
    CHECK(all.size() == (std::size_t{1} << g.cycle_space_dim()));
    if (g.is_bipartite()) {
      CHECK(even.size() == all.size());
    } else {
      CHECK(2 * even.size() == all.size());
    }
    std::set<EdgeSet> lookup(even.begin(), even.end());
    for (EdgeSet c : even) {
      CHECK((c.empty() || c.size() >= 4));
      for (int v = 1; v <= g.vertex_count(); ++v) CHECK(degree_in(g, c, v) % 2 == 0);
    }
    for (std::size_t i = 0; i < even.size(); i += 3) {
      for (std::size_t k = 0; k < even.size(); k += 5) CHECK(lookup.count(even[i] ^ even[k]) == 1);
    }
  }
}

TEST_CASE("bipartiteness and colour classes") {
  CHECK(fixture("fig1").is_bipartite());
  CHECK(!fixture("fig3").is_bipartite());
  auto colors = fixture("c6").color_class();
  REQUIRE(colors);
  CHECK(colors->size() == 3);
  CHECK(!fixture("triangle").color_class());
}

TEST_CASE("classify_eulerian") {
  Graph fig1 = fixture("fig1");
  auto hex = classify_eulerian(fig1, edges(fig1, "1-2,2-3,3-4,4-5,5-6,1-6"));
  CHECK(hex.tag == EulerianTag::EvenCycle);
  CHECK(classify_eulerian(fig1, edges(fig1, "1-2,2-3")).tag == EulerianTag::NotEulerian);

  Graph fig2 = fixture("fig2");
  auto bowtie = classify_eulerian(fig2, edges(fig2, "1-2,1-3,2-3,1-4,1-5,4-5"));
  CHECK(bowtie.tag == EulerianTag::TwoOddCyclesShared1);
  REQUIRE(bowtie.parts.size() == 2);
  CHECK((bowtie.parts[0] | bowtie.parts[1]) == edges(fig2, "1-2,1-3,2-3,1-4,1-5,4-5"));
  CHECK(bowtie.parts[0].size() == 3);

  auto apart = classify_eulerian(fig2, edges(fig2, "1-2,1-3,2-3,6-7,7-8,8-9,9-10,6-10"));
  CHECK(apart.tag == EulerianTag::TwoOddCyclesShared0);
  REQUIRE(apart.parts.size() == 2);
  CHECK(apart.parts[0].size() + apart.parts[1].size() == 8);

  // Two triangles sharing two vertices contain an even cycle.
  Graph k4 = fixture("k4");
  CHECK(classify_eulerian(k4, k4.all_edges() - edges(k4, "1-2")).tag == EulerianTag::NotEulerian);
  CHECK(classify_eulerian(k4, EdgeSet{}).tag == EulerianTag::OtherEulerian);
  CHECK(classify_eulerian(k4, edges(k4, "1-2,2-3,1-3")).tag == EulerianTag::OtherEulerian);
}

TEST_CASE("classify_eulerian agrees with the cycle-decomposition oracle") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int round = 0; round < 120; ++round) {
    Graph g = test::random_graph(rng, 9, 12);
    for (EdgeSet c : oracle_eulerian_sets(g)) {
      auto fast = classify_eulerian(g, c);
      auto slow = oracle_classify_eulerian(g, c);
      CHECK(fast.tag == slow.tag);
      CHECK(fast.parts == slow.parts);
      ++checked;
    }
  }
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "k5"}) {
    Graph g = fixture(name);
    for (EdgeSet c : oracle_eulerian_sets(g)) CHECK(classify_eulerian(g, c).tag == oracle_classify_eulerian(g, c).tag);
  }
  CHECK(checked > 500);
}

TEST_CASE("incidence matrix") {
  Graph g = fixture("fig1");
  auto b = g.incidence_matrix();
  REQUIRE(b.size() == 6);
  for (int e = 0; e < g.edge_count(); ++e) {
    int column = 0;
    for (const auto& row : b) column += row[static_cast<std::size_t>(e)];
    CHECK(column == 2);
    CHECK(b[static_cast<std::size_t>(g.edge(e).u - 1)][static_cast<std::size_t>(e)] == 1);
  }
}
