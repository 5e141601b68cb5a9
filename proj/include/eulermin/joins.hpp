#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "eulermin/edge_set.hpp"
#include "eulermin/graph.hpp"

namespace eulermin {

// A vertex set T with a cardinality parity p; J is a (T,p)-join when its
// odd-degree vertices are T and |J| = p mod 2.
struct TPPair {
  VertexSet t;
  int parity = 0;

  auto operator<=>(const TPPair&) const = default;
};

std::string to_string(const TPPair& pair);

struct JoinClasses {
  TPPair pair;
  int min_card = 0;
  std::vector<EdgeSet> all_min_joins;         // ascending by mask
  std::vector<std::vector<EdgeSet>> classes;  // each ascending; ordered by first member
  std::vector<EdgeSet> representatives;       // one per class, aligned with `classes`
  EdgeSet anchor;

  int class_count() const { return static_cast<int>(classes.size()); }
  // Index into `classes` of the class containing `join`, or -1.
  int class_of(EdgeSet join) const;
};

TPPair classify_join(const Graph& g, EdgeSet j);

// Some (T,p)-join, if any exists: spanning-forest T-join, with an odd cycle
// added when the parity is wrong.
std::optional<EdgeSet> find_join(const Graph& g, const TPPair& pair);
bool join_exists(const Graph& g, const TPPair& pair);

int min_join_cardinality(const Graph& g, const TPPair& pair);
std::vector<EdgeSet> enumerate_min_joins(const Graph& g, const TPPair& pair);
bool is_min_join(const Graph& g, EdgeSet j);

// Connected components of the intersection graph on `joins`. Throws
// Precondition when the joins do not share one (T,p) pair.
std::vector<std::vector<EdgeSet>> equivalence_classes(const Graph& g, const std::vector<EdgeSet>& joins);

JoinClasses build_join_classes(const Graph& g, const TPPair& pair);

}  // namespace eulermin
