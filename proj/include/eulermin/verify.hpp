#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulermin/graph.hpp"
#include "eulermin/ideal.hpp"
#include "eulermin/joins.hpp"
#include "eulermin/monomial.hpp"

namespace eulermin {

struct VerifyLimits {
  int max_fiber_degree = 12;
  std::size_t max_fiber_size = 2'000'000;
};

// All monomials of one degree whose squarefree part is a (T,p)-join for one
// pair. Members ascending.
struct Fiber {
  int degree = 0;
  TPPair pair;
  std::vector<Monomial> monomials;
};

Fiber build_fiber(const Graph& g, const Monomial& m, const VerifyLimits& limits = {});

// Move graph on a fiber: t^b -- t^c when t^b = w*lhs and t^c = w*rhs (or the
// reverse) for some generator.
struct MoveGraph {
  std::vector<std::pair<std::size_t, std::size_t>> moves;  // indices into the fiber, deduplicated
  int components = 0;
};

MoveGraph move_graph(const Fiber& f, const std::vector<Binomial>& gens);
bool fiber_connected(const Graph& g, const Fiber& f, const std::vector<Binomial>& gens);

struct GenerationReport {
  bool ok = true;
  std::optional<Fiber> disconnected;  // first fiber found disconnected
  std::string detail;
};

// Decisive fibers: the squares fiber and the min-join fiber of every pair
// produced by balanced splits of cycle-like Eulerian sets.
GenerationReport check_decisive_fibers(const Graph& g, const std::vector<Binomial>& gens);
// Every fiber of every degree 1..max_degree.
GenerationReport check_all_fibers(const Graph& g, const std::vector<Binomial>& gens, int max_degree,
                                  const VerifyLimits& limits = {});

bool verify_generates(const Graph& g, const std::vector<Binomial>& gens, int max_degree,
                      const VerifyLimits& limits = {});

struct MinimalityReport {
  bool ok = true;
  std::optional<std::size_t> removable;  // index of a generator whose removal keeps generation
};

// Removing any single generator must disconnect some decisive fiber.
MinimalityReport check_minimality(const Graph& g, const std::vector<Binomial>& gens);

// Evaluation t_e -> 1 on `support`, t_e -> 0 elsewhere.
struct PsiCertificate {
  EdgeSet support;
  TPPair pair;

  int evaluate(const Monomial& m) const { return m.support().subset_of(support) ? 1 : 0; }
  int evaluate(EdgeSet join) const { return join.subset_of(support) ? 1 : 0; }
};

PsiCertificate psi_certificate(const Graph& g, const JoinClasses& classes, EdgeSet reference);

// ---- Brute-force oracles (2^s scans, independent of the cycle space) ----

std::vector<EdgeSet> oracle_min_joins(const Graph& g, const TPPair& pair);
// Every Eulerian subset, both parities, ascending.
std::vector<EdgeSet> oracle_eulerian_sets(const Graph& g);
// Cycle decomposition by searching subsets of c for cycles.
EulerianClass oracle_classify_eulerian(const Graph& g, EdgeSet c);
// Number of minimal generators per degree 1..max_degree, counted as
// (components - 1) of each fiber under the "shares a variable" relation.
std::map<int, int> oracle_generator_counts(const Graph& g, int max_degree, const VerifyLimits& limits = {});

}  // namespace eulermin
