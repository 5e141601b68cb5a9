#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "eulermin/graph.hpp"
#include "eulermin/ideal.hpp"
#include "eulermin/joins.hpp"

namespace eulermin {

inline constexpr int kSchemaVersion = 1;

// "1-2,2-3,3-4" <-> EdgeSet. Every token must name an edge of g.
EdgeSet parse_edge_set(const Graph& g, std::string_view text);
std::string format_edge_set(const Graph& g, EdgeSet j);

// "--t 2,5 --p 1"; an empty vertex list is allowed.
TPPair parse_tp_pair(const Graph& g, std::string_view vertices, int parity);

nlohmann::json generating_set_json(const Graph& g, const GeneratingSet& gens);
std::string generating_set_text(const Graph& g, const GeneratingSet& gens);
nlohmann::json join_classes_json(const Graph& g, const JoinClasses& jc);

// Macaulay2 script that rebuilds the ideal as a preimage and asserts that it
// equals the ideal of our generators, with matching minimal degrees.
std::string macaulay2_script(const Graph& g, const GeneratingSet& gens);

// Graphviz source; edges in `highlight` are drawn bold red.
std::string dot_graph(const Graph& g, EdgeSet highlight = {}, std::string_view title = "G");

}  // namespace eulermin
