#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "eulermin/graph.hpp"
#include "eulermin/joins.hpp"
#include "eulermin/monomial.hpp"

namespace eulermin {

struct JoinGenerator {
  TPPair pair;
  EdgeSet join;    // a non-anchor representative
  EdgeSet anchor;  // K(T,p)
  Binomial binomial;
};

// Square differences against one base edge plus one t_J - t_K(T,p) per
// non-anchor class representative of every pair in T_G*.
struct GeneratingSet {
  int base_edge = 0;
  std::vector<Binomial> square_binomials;
  std::vector<JoinGenerator> join_binomials;
  std::map<int, int> degrees;  // degree -> number of generators

  std::vector<Binomial> all() const;
  int size() const { return static_cast<int>(square_binomials.size() + join_binomials.size()); }
};

bool is_member(const Graph& g, const Binomial& b);
bool lattice_member(const Graph& g, std::span<const std::int64_t> theta);

// Every t_e^2 - t_f^2 and every Eulerian binomial t_J - t_K (each unordered
// pair once).
std::vector<Binomial> groebner_set(const Graph& g);

// Edge indices from the largest variable to the smallest; empty means file order.
using EdgeOrder = std::vector<int>;

// Remainder of m under the Groebner set with grevlex for `order`.
Monomial normal_form(const Graph& g, const Monomial& m, const EdgeOrder& order = {});

enum class CandidateSource {
  CycleLike,    // splits of even cycles and of two odd cycles sharing <= 1 vertex
  AllEulerian,  // splits of every even-cardinality Eulerian set
};

// Distinct (T,p) classifications of one side of every balanced split of the
// selected Eulerian sets, ascending.
std::vector<TPPair> candidate_pairs(const Graph& g, CandidateSource source = CandidateSource::CycleLike);

// One JoinClasses record per pair with at least two classes, sorted by
// (min_card, pair).
std::vector<JoinClasses> enumerate_tg_star(const Graph& g, CandidateSource source = CandidateSource::CycleLike);

GeneratingSet minimal_generating_set(const Graph& g, std::optional<int> base_edge = std::nullopt,
                                     std::optional<std::uint64_t> seed = std::nullopt);
GeneratingSet minimal_generating_set(const Graph& g, const std::vector<JoinClasses>& tg_star,
                                     std::optional<int> base_edge = std::nullopt,
                                     std::optional<std::uint64_t> seed = std::nullopt);

std::map<int, int> generating_degrees(const Graph& g);
int max_generating_degree(const Graph& g);

bool is_required_generator(const Graph& g, const Binomial& b);

}  // namespace eulermin
