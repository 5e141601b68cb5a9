#include <random>

#include "doctest.h"
#include "eulermin/error.hpp"
#include "eulermin/joins.hpp"
#include "eulermin/verify.hpp"
#include "support.hpp"

using namespace eulermin;
using eulermin::test::edges;
using eulermin::test::fixture;

namespace {

TPPair pair_of(std::initializer_list<int> vs, int p) {
  VertexSet t;
  for (int v : vs) t |= VertexSet::single(v);
  return {t, p};
}

}  // namespace

TEST_CASE("classify_join") {
  Graph g = fixture("fig1");
  CHECK(classify_join(g, EdgeSet{}) == TPPair{});
  CHECK(classify_join(g, edges(g, "2-5")) == pair_of({2, 5}, 1));
  CHECK(classify_join(g, edges(g, "2-3,3-4,4-5")) == pair_of({2, 5}, 1));
  CHECK(classify_join(g, edges(g, "1-2,1-6,5-6")) == pair_of({2, 5}, 1));
  CHECK(to_string(pair_of({2, 5}, 1)) == "({2,5},1)");
}

TEST_CASE("join_exists and find_join") {
  Graph g = fixture("fig1");
  CHECK(!join_exists(g, pair_of({2, 5}, 0)));
  CHECK(join_exists(g, pair_of({2, 5}, 1)));
  CHECK(!join_exists(g, pair_of({3}, 0)));
  CHECK(!join_exists(g, pair_of({3}, 1)));
  CHECK_THROWS_AS(min_join_cardinality(g, pair_of({2, 5}, 0)), Error);
  CHECK_THROWS_AS(enumerate_min_joins(g, pair_of({2, 5}, 0)), Error);

  Graph tri = fixture("triangle");
  CHECK(join_exists(tri, pair_of({1, 2}, 0)));
  CHECK(join_exists(tri, pair_of({1, 2}, 1)));
  CHECK(!join_exists(parse_graph("e 1 2\ne 3 4"), pair_of({1, 3}, 0)));
}

TEST_CASE("bipartite dichotomy and parity of the minimum") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    Graph g = test::random_graph(rng, 8, 12, round % 2 == 0);
    TPPair base = classify_join(g, test::random_subset(rng, g));
    const bool even_ok = join_exists(g, {base.t, 0});
    const bool odd_ok = join_exists(g, {base.t, 1});
    if (g.is_bipartite()) {
      CHECK(even_ok != odd_ok);
    } else if (g.component_count() == 1) {
      CHECK((even_ok && odd_ok));
    }
    for (int p : {0, 1}) {
      TPPair pair{base.t, p};
      auto found = find_join(g, pair);
      CHECK(found.has_value() == join_exists(g, pair));
      if (!found) continue;
      CHECK(classify_join(g, *found) == pair);
      CHECK(min_join_cardinality(g, pair) % 2 == p);
    }
  }
}

TEST_CASE("enumerate_min_joins examples") {
  Graph fig1 = fixture("fig1");
  CHECK(min_join_cardinality(fig1, TPPair{}) == 0);
  CHECK(min_join_cardinality(fig1, pair_of({2, 5}, 1)) == 1);
  CHECK(enumerate_min_joins(fig1, pair_of({2, 5}, 1)) == std::vector<EdgeSet>{edges(fig1, "2-5")});
  CHECK(enumerate_min_joins(fig1, TPPair{}) == std::vector<EdgeSet>{EdgeSet{}});

  Graph c4 = fixture("c4");
  CHECK(enumerate_min_joins(c4, pair_of({1, 3}, 0)) ==
        std::vector<EdgeSet>{edges(c4, "1-2,2-3"), edges(c4, "3-4,1-4")});

  Graph c6 = fixture("c6");
  TPPair all{VertexSet(0x3f), 1};
  CHECK(min_join_cardinality(c6, all) == 3);
  CHECK(enumerate_min_joins(c6, all) ==
        std::vector<EdgeSet>{edges(c6, "1-2,3-4,5-6"), edges(c6, "2-3,4-5,1-6")});
}

TEST_CASE("enumerate_min_joins matches the subset-scan oracle") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    Graph g = test::random_graph(rng, 9, 14, round % 4 == 0);
    TPPair pair = classify_join(g, test::random_subset(rng, g));
    if (rng() % 2) pair.parity ^= 1;
    if (!join_exists(g, pair)) continue;
    CHECK(enumerate_min_joins(g, pair) == oracle_min_joins(g, pair));
  }
  Graph g = fixture("fig2");
  CHECK(oracle_min_joins(g, TPPair{}) == std::vector<EdgeSet>{EdgeSet{}});
}

TEST_CASE("is_min_join") {
  Graph g = fixture("fig1");
  CHECK(is_min_join(g, EdgeSet{}));
  CHECK(!is_min_join(g, edges(g, "1-2,1-6,5-6")));
  CHECK(is_min_join(g, edges(g, "2-5")));
  CHECK(is_min_join(g, edges(g, "1-2,3-4,5-6")));
}

TEST_CASE("equivalence classes") {
  Graph c4 = fixture("c4");
  auto jc = build_join_classes(c4, pair_of({1, 3}, 0));
  CHECK(jc.min_card == 2);
  CHECK(jc.class_count() == 2);
  CHECK(jc.anchor == edges(c4, "1-2,2-3"));
  CHECK(jc.class_of(edges(c4, "3-4,1-4")) == 1);
  CHECK(jc.class_of(edges(c4, "1-2")) == -1);

  Graph fig1 = fixture("fig1");
  EdgeSet j = edges(fig1, "1-2,3-4,5-6");
  EdgeSet k = edges(fig1, "2-3,4-5,1-6");
  auto hex = build_join_classes(fig1, classify_join(fig1, j));
  CHECK(hex.min_card == 3);
  CHECK(hex.class_count() == 1);
  CHECK(hex.class_of(j) == hex.class_of(k));
  CHECK(equivalence_classes(fig1, {j}).size() == 1);
  CHECK_THROWS_AS(equivalence_classes(fig1, {j, edges(fig1, "2-5")}), Error);

  auto chord = build_join_classes(fig1, pair_of({2, 5}, 1));
  CHECK(chord.min_card == 1);
  CHECK(chord.class_count() == 1);
  CHECK(chord.anchor == edges(fig1, "2-5"));

  auto empty = build_join_classes(fixture("k5"), TPPair{});
  CHECK(empty.min_card == 0);
  CHECK(empty.class_count() == 1);
}

TEST_CASE("join class invariants") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 150; ++round) {
    Graph g = test::random_graph(rng, 8, 13);
    TPPair pair = classify_join(g, test::random_subset(rng, g));
    auto jc = build_join_classes(g, pair);
    std::size_t members = 0;
    for (std::size_t c = 0; c < jc.classes.size(); ++c) {
      members += jc.classes[c].size();
      CHECK(jc.representatives[c] == jc.classes[c].front());
      for (EdgeSet a : jc.classes[c]) {
        CHECK(classify_join(g, a) == pair);
        CHECK(a.size() == jc.min_card);
        for (std::size_t d = c + 1; d < jc.classes.size(); ++d) {
          for (EdgeSet b : jc.classes[d]) CHECK(!a.intersects(b));
        }
      }
    }
    CHECK(members == jc.all_min_joins.size());
    CHECK(jc.anchor == jc.representatives.front());
  }
}

TEST_CASE("is_min_join matches the minimum cardinality on every subset") {
  for (const char* name : {"fig1", "c6", "k4", "fig4", "k23"}) {
    Graph g = fixture(name);
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t m = 0; m < total; ++m) {
      EdgeSet j(m);
      CHECK(is_min_join(g, j) == (j.size() == min_join_cardinality(g, classify_join(g, j))));
    }
  }
}
