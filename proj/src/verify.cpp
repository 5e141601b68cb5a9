#include "eulermin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "eulermin/error.hpp"
#include "eulermin/kernels.hpp"

namespace eulermin {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_offset_;
    return true;
  }
  int components() const { return static_cast<int>(parent_.size()) + components_offset_; }

 private:
  std::vector<std::size_t> parent_;
  int components_offset_ = 0;
};

using Exps = std::vector<std::uint32_t>;

std::string key_of(const Exps& e) {
  std::string k(e.size(), '\0');
  for (std::size_t i = 0; i < e.size(); ++i) k[i] = static_cast<char>(e[i]);
  return k;
}

double multiset_count(int s, int d) {
  return std::round(std::exp(std::lgamma(s + d) - std::lgamma(d + 1) - std::lgamma(s)));
}

// Visits every exponent vector of total degree d over the edges in `allowed`.
void for_each_composition(int s, int d, const std::function<void(const Exps&)>& visit) {
  Exps exps(static_cast<std::size_t>(s), 0);
  std::function<void(int, int)> rec = [&](int edge, int left) {
    if (edge == s - 1) {
      exps[static_cast<std::size_t>(edge)] = static_cast<std::uint32_t>(left);
      visit(exps);
      exps[static_cast<std::size_t>(edge)] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      exps[static_cast<std::size_t>(edge)] = static_cast<std::uint32_t>(k);
      rec(edge + 1, left - k);
    }
    exps[static_cast<std::size_t>(edge)] = 0;
  };
  rec(0, d);
}

std::vector<Fiber> decisive_fibers(const Graph& g) {
  const int s = g.edge_count();
  std::vector<Fiber> out;
  Fiber squares{2, TPPair{}, {}};
  for (int e = 0; e < s; ++e) squares.monomials.push_back(Monomial::square(s, e));
  out.push_back(std::move(squares));
  for (const TPPair& pair : candidate_pairs(g, CandidateSource::CycleLike)) {
    Fiber f;
    f.pair = pair;
    for (EdgeSet j : enumerate_min_joins(g, pair)) f.monomials.push_back(Monomial::from_set(s, j));
    f.degree = f.monomials.front().degree();
    if (f.monomials.size() > 1) out.push_back(std::move(f));
  }
  return out;
}

std::string describe(const Graph& g, const Fiber& f) {
  std::string out = "fiber of degree " + std::to_string(f.degree) + " for " + to_string(f.pair) + " with " +
                    std::to_string(f.monomials.size()) + " monomials, e.g. ";
  out += format_monomial(g, f.monomials.front());
  if (f.monomials.size() > 1) out += ", " + format_monomial(g, f.monomials.back());
  return out;
}

GenerationReport check_fibers(const Graph& g, const std::vector<Fiber>& fibers, const std::vector<Binomial>& gens) {
  for (const auto& f : fibers) {
    if (!fiber_connected(g, f, gens)) return {false, f, "disconnected " + describe(g, f)};
  }
  return {};
}

}  // namespace

Fiber build_fiber(const Graph& g, const Monomial& m, const VerifyLimits& limits) {
  const int s = g.edge_count();
  if (m.edge_count() != s) throw Error(ErrorKind::Precondition, "monomial has wrong edge count");
  Fiber f;
  f.degree = m.degree();
  f.pair = classify_join(g, m.squarefree_part());
  if (f.degree > limits.max_fiber_degree) throw Error(ErrorKind::CapExceeded, "fiber degree exceeds cap");

  auto seed = find_join(g, f.pair);
  std::vector<EdgeSet> joins;
  for (EdgeSet c : g.even_eulerian_sets()) {
    EdgeSet j = *seed ^ c;
    if (j.size() <= f.degree) joins.push_back(j);
  }
  std::size_t total = 0;
  for (EdgeSet j : joins) {
    const int half = (f.degree - j.size()) / 2;
    total += static_cast<std::size_t>(multiset_count(s, half));
    if (total > limits.max_fiber_size) throw Error(ErrorKind::CapExceeded, "fiber size exceeds cap");
  }
  for (EdgeSet j : joins) {
    const int half = (f.degree - j.size()) / 2;
    for_each_composition(s, half, [&](const Exps& mu) {
      Exps exps(mu.size());
      for (std::size_t e = 0; e < mu.size(); ++e) exps[e] = 2 * mu[e] + (j.contains(static_cast<int>(e)) ? 1U : 0U);
      f.monomials.emplace_back(std::move(exps));
    });
  }
  std::sort(f.monomials.begin(), f.monomials.end());
  return f;
}

MoveGraph move_graph(const Fiber& f, const std::vector<Binomial>& gens) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < f.monomials.size(); ++i) index.emplace(key_of(f.monomials[i].exponents()), i);
  DisjointSets sets(f.monomials.size());
  std::set<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t i = 0; i < f.monomials.size(); ++i) {
    const Monomial& m = f.monomials[i];
    for (const auto& b : gens) {
      if (b.lhs().edge_count() != m.edge_count() || b.degree() > m.degree()) continue;
      if (!b.lhs().divides(m)) continue;
      Monomial next = (m / b.lhs()) * b.rhs();
      auto it = index.find(key_of(next.exponents()));
      if (it == index.end()) continue;
      moves.emplace(std::min(i, it->second), std::max(i, it->second));
      sets.unite(i, it->second);
    }
  }
  return {{moves.begin(), moves.end()}, sets.components()};
}

bool fiber_connected(const Graph&, const Fiber& f, const std::vector<Binomial>& gens) {
  return f.monomials.size() <= 1 || move_graph(f, gens).components == 1;
}

GenerationReport check_decisive_fibers(const Graph& g, const std::vector<Binomial>& gens) {
  return check_fibers(g, decisive_fibers(g), gens);
}

GenerationReport check_all_fibers(const Graph& g, const std::vector<Binomial>& gens, int max_degree,
                                  const VerifyLimits& limits) {
  const int s = g.edge_count();
  if (max_degree > limits.max_fiber_degree) throw Error(ErrorKind::CapExceeded, "fiber degree exceeds cap");
  for (int d = 1; d <= max_degree; ++d) {
    if (multiset_count(s, d) > static_cast<double>(limits.max_fiber_size)) {
      throw Error(ErrorKind::CapExceeded, "too many monomials of degree " + std::to_string(d));
    }
    std::vector<Exps> monos;
    for_each_composition(s, d, [&](const Exps& e) { monos.push_back(e); });
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(key_of(monos[i]), i);

    DisjointSets sets(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const Exps& m = monos[i];
      for (const auto& b : gens) {
        if (b.degree() > d) continue;
        const Exps& lhs = b.lhs().exponents();
        bool divides = true;
        for (std::size_t e = 0; e < m.size() && divides; ++e) divides = lhs[e] <= m[e];
        if (!divides) continue;
        Exps next = m;
        const Exps& rhs = b.rhs().exponents();
        for (std::size_t e = 0; e < m.size(); ++e) next[e] = m[e] - lhs[e] + rhs[e];
        auto it = index.find(key_of(next));
        if (it != index.end()) sets.unite(i, it->second);
      }
    }
    std::map<TPPair, std::size_t> root_of_pair;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const Monomial mono(monos[i]);
      const TPPair pair = classify_join(g, mono.squarefree_part());
      auto [it, fresh] = root_of_pair.emplace(pair, sets.find(i));
      if (!fresh && it->second != sets.find(i)) {
        Fiber f{d, pair, {}};
        for (const auto& e : monos) {
          Monomial other(e);
          if (classify_join(g, other.squarefree_part()) == pair) f.monomials.push_back(std::move(other));
        }
        std::sort(f.monomials.begin(), f.monomials.end());
        std::string detail = "disconnected " + describe(g, f);
        return {false, std::move(f), std::move(detail)};
      }
    }
  }
  return {};
}

bool verify_generates(const Graph& g, const std::vector<Binomial>& gens, int max_degree, const VerifyLimits& limits) {
  for (const auto& b : gens) {
    if (!is_member(g, b)) return false;
  }
  return check_decisive_fibers(g, gens).ok && check_all_fibers(g, gens, max_degree, limits).ok;
}

MinimalityReport check_minimality(const Graph& g, const std::vector<Binomial>& gens) {
  const auto fibers = decisive_fibers(g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Binomial> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) rest.push_back(gens[k]);
    }
    if (check_fibers(g, fibers, rest).ok) return {false, i};
  }
  return {};
}

PsiCertificate psi_certificate(const Graph&, const JoinClasses& classes, EdgeSet reference) {
  const int slot = classes.class_of(reference);
  if (slot < 0) throw Error(ErrorKind::Precondition, "reference is not a minimum join of the pair");
  PsiCertificate cert;
  cert.pair = classes.pair;
  for (EdgeSet j : classes.classes[static_cast<std::size_t>(slot)]) cert.support |= j;
  return cert;
}

std::vector<EdgeSet> oracle_min_joins(const Graph& g, const TPPair& pair) {
  if (g.edge_count() > g.limits().max_subset_edges) {
    throw Error(ErrorKind::CapExceeded, "exhaustive oracle limited to " + std::to_string(g.limits().max_subset_edges) +
                                            " edges");
  }
  std::vector<EdgeSet> out;
  int best = -1;
  for (EdgeSet j : kernels::subset_scan_parallel(g.endpoint_masks(), pair.t)) {
    if (j.size() % 2 != pair.parity) continue;
    if (best < 0 || j.size() < best) {
      best = j.size();
      out.clear();
    }
    if (j.size() == best) out.push_back(j);
  }
  return out;
}

std::vector<EdgeSet> oracle_eulerian_sets(const Graph& g) {
  if (g.edge_count() > g.limits().max_subset_edges) {
    throw Error(ErrorKind::CapExceeded, "exhaustive oracle edge cap exceeded");
  }
  return kernels::subset_scan_parallel(g.endpoint_masks(), VertexSet{});
}

EulerianClass oracle_classify_eulerian(const Graph& g, EdgeSet c) {
  if (!g.odd_vertices(c).empty()) return {EulerianTag::NotEulerian, {}};
  if (c.size() > g.limits().max_subset_edges) throw Error(ErrorKind::CapExceeded, "set too large for oracle");

  auto is_cycle = [&](EdgeSet d) {
    if (d.empty()) return false;
    for (int v : g.vertices_of(d).vertices()) {
      if ((d & g.incident(v)).size() != 2) return false;
    }
    // Edge-connectivity by flood fill over shared endpoints.
    EdgeSet reached = EdgeSet::single(d.lowest());
    EdgeSet frontier = reached;
    while (!frontier.empty()) {
      EdgeSet next;
      frontier.for_each([&](int e) {
        next |= (g.incident(g.edge(e).u) | g.incident(g.edge(e).v)) & d;
      });
      frontier = next - reached;
      reached |= next;
    }
    return reached == d;
  };

  if (is_cycle(c)) {
    if (c.size() % 2 == 0) return {EulerianTag::EvenCycle, {c}};
    return {EulerianTag::OtherEulerian, {}};
  }
  // Submask walk over c looking for an odd cycle whose complement is an odd cycle.
  const std::uint64_t full = c.bits();
  for (std::uint64_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
    EdgeSet first(sub);
    EdgeSet second = c - first;
    if (first > second) continue;
    if (first.size() % 2 == 0 || second.size() % 2 == 0) continue;
    if (!is_cycle(first) || !is_cycle(second)) continue;
    const int shared = (g.vertices_of(first) & g.vertices_of(second)).size();
    if (shared == 0) return {EulerianTag::TwoOddCyclesShared0, {first, second}};
    if (shared == 1) return {EulerianTag::TwoOddCyclesShared1, {first, second}};
  }
  return {EulerianTag::OtherEulerian, {}};
}

std::map<int, int> oracle_generator_counts(const Graph& g, int max_degree, const VerifyLimits& limits) {
  const int s = g.edge_count();
  std::map<int, int> counts;
  for (int d = 1; d <= max_degree; ++d) {
    if (multiset_count(s, d) > static_cast<double>(limits.max_fiber_size)) {
      throw Error(ErrorKind::CapExceeded, "too many monomials of degree " + std::to_string(d));
    }
    // Group monomials by fiber, then join any two sharing a variable.
    std::map<TPPair, std::vector<Exps>> fibers;
    for_each_composition(s, d, [&](const Exps& e) {
      VertexSet odd;
      int parity = 0;
      for (int k = 0; k < s; ++k) {
        if (e[static_cast<std::size_t>(k)] % 2 == 1) {
          odd ^= g.endpoints(k);
          parity ^= 1;
        }
      }
      fibers[TPPair{odd, parity}].push_back(e);
    });
    int generators = 0;
    for (const auto& [pair, monos] : fibers) {
      DisjointSets sets(monos.size());
      std::vector<std::ptrdiff_t> holder(static_cast<std::size_t>(s), -1);
      for (std::size_t i = 0; i < monos.size(); ++i) {
        for (int k = 0; k < s; ++k) {
          if (monos[i][static_cast<std::size_t>(k)] == 0) continue;
          auto& h = holder[static_cast<std::size_t>(k)];
          if (h < 0) {
            h = static_cast<std::ptrdiff_t>(i);
          } else {
            sets.unite(static_cast<std::size_t>(h), i);
          }
        }
      }
      generators += sets.components() - 1;
    }
    if (generators > 0) counts[d] = generators;
  }
  return counts;
}

}  // namespace eulermin
