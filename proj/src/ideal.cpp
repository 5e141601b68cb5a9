#include "eulermin/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "eulermin/error.hpp"

namespace eulermin {

std::vector<Binomial> GeneratingSet::all() const {
  std::vector<Binomial> out = square_binomials;
  for (const auto& j : join_binomials) out.push_back(j.binomial);
  return out;
}

bool is_member(const Graph& g, const Binomial& b) {
  return b.is_homogeneous() &&
         classify_join(g, b.lhs().squarefree_part()) == classify_join(g, b.rhs().squarefree_part());
}

bool lattice_member(const Graph& g, std::span<const std::int64_t> theta) {
  if (static_cast<int>(theta.size()) != g.edge_count()) {
    throw Error(ErrorKind::Precondition, "lattice vector length differs from edge count");
  }
  if (std::accumulate(theta.begin(), theta.end(), std::int64_t{0}) != 0) return false;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::int64_t row = 0;
    g.incident(v).for_each([&](int e) { row += theta[static_cast<std::size_t>(e)]; });
    if (row % 2 != 0) return false;
  }
  return true;
}

namespace {

// Calls visit(J) for every J subset of c with |J| = |c|/2 containing the
// lowest edge of c, i.e. one side of each unordered balanced split.
template <typename Visit>
void for_each_balanced_half(EdgeSet c, Visit&& visit) {
  const std::vector<int> members = c.indices();
  const int half = static_cast<int>(members.size()) / 2;
  if (half == 0) return;
  const int rest = static_cast<int>(members.size()) - 1;
  std::vector<int> pick(static_cast<std::size_t>(half - 1));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    EdgeSet j = EdgeSet::single(members[0]);
    for (int p : pick) j |= EdgeSet::single(members[static_cast<std::size_t>(p)]);
    visit(j);
    int i = half - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == rest - (half - 2 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < half - 1; ++k) pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
  }
}

bool cycle_like(EulerianTag tag) {
  return tag == EulerianTag::EvenCycle || tag == EulerianTag::TwoOddCyclesShared0 ||
         tag == EulerianTag::TwoOddCyclesShared1;
}

}  // namespace

std::vector<Binomial> groebner_set(const Graph& g) {
  const int s = g.edge_count();
  std::vector<Binomial> out;
  for (int e = 0; e < s; ++e) {
    for (int f = e + 1; f < s; ++f) out.emplace_back(Monomial::square(s, e), Monomial::square(s, f));
  }
  for (EdgeSet c : g.even_eulerian_sets()) {
    if (c.empty()) continue;
    for_each_balanced_half(c, [&](EdgeSet j) {
      out.emplace_back(Monomial::from_set(s, j), Monomial::from_set(s, c - j));
    });
  }
  return out;
}

Monomial normal_form(const Graph& g, const Monomial& m, const EdgeOrder& order) {
  const int s = g.edge_count();
  if (m.edge_count() != s) throw Error(ErrorKind::Precondition, "monomial has wrong edge count");
  std::vector<int> rank(static_cast<std::size_t>(s), -1);
  if (order.empty()) {
    std::iota(rank.begin(), rank.end(), 0);
  } else {
    if (static_cast<int>(order.size()) != s) throw Error(ErrorKind::Precondition, "edge order is not a permutation");
    for (int pos = 0; pos < s; ++pos) {
      int e = order[static_cast<std::size_t>(pos)];
      if (e < 0 || e >= s || rank[static_cast<std::size_t>(e)] >= 0) {
        throw Error(ErrorKind::Precondition, "edge order is not a permutation");
      }
      rank[static_cast<std::size_t>(e)] = pos;
    }
  }
  const int last = static_cast<int>(std::max_element(rank.begin(), rank.end()) - rank.begin());

  // Leading term of t_A - t_(C\A) is the side avoiding the smallest variable of C.
  struct Rule {
    EdgeSet c;
    EdgeSet leading_pool;  // C minus its smallest variable
    int half;
  };
  std::vector<Rule> rules;
  for (EdgeSet c : g.even_eulerian_sets()) {
    if (c.empty()) continue;
    int smallest = c.lowest();
    c.for_each([&](int e) {
      if (rank[static_cast<std::size_t>(e)] > rank[static_cast<std::size_t>(smallest)]) smallest = e;
    });
    rules.push_back({c, c - EdgeSet::single(smallest), c.size() / 2});
  }

  std::vector<std::uint64_t> exps(m.exponents().begin(), m.exponents().end());
  while (true) {
    for (int e = 0; e < s; ++e) {
      if (e == last) continue;
      auto& x = exps[static_cast<std::size_t>(e)];
      exps[static_cast<std::size_t>(last)] += x - x % 2;
      x %= 2;
    }
    EdgeSet support;
    for (int e = 0; e < s; ++e) {
      if (exps[static_cast<std::size_t>(e)] > 0) support |= EdgeSet::single(e);
    }
    bool reduced = false;
    for (const auto& rule : rules) {
      EdgeSet avail = rule.leading_pool & support;
      if (avail.size() < rule.half) continue;
      EdgeSet lead;
      for (std::uint64_t b = avail.bits(); lead.size() < rule.half; b &= b - 1) {
        lead |= EdgeSet::single(std::countr_zero(b));
      }
      lead.for_each([&](int e) { --exps[static_cast<std::size_t>(e)]; });
      (rule.c - lead).for_each([&](int e) { ++exps[static_cast<std::size_t>(e)]; });
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  std::vector<std::uint32_t> out(exps.size());
  for (std::size_t e = 0; e < exps.size(); ++e) {
    if (exps[e] > Monomial::kMaxExponent) throw Error(ErrorKind::CapExceeded, "normal form exponent exceeds 64");
    out[e] = static_cast<std::uint32_t>(exps[e]);
  }
  return Monomial(std::move(out));
}

std::vector<TPPair> candidate_pairs(const Graph& g, CandidateSource source) {
  std::set<TPPair> candidates;
  for (EdgeSet c : g.even_eulerian_sets()) {
    if (c.empty()) continue;
    if (source == CandidateSource::CycleLike && !cycle_like(classify_eulerian(g, c).tag)) continue;
    for_each_balanced_half(c, [&](EdgeSet j) { candidates.insert(classify_join(g, j)); });
  }
  return {candidates.begin(), candidates.end()};
}

std::vector<JoinClasses> enumerate_tg_star(const Graph& g, CandidateSource source) {
  const std::vector<TPPair> pairs = candidate_pairs(g, source);
  std::vector<std::optional<JoinClasses>> built(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    JoinClasses jc = build_join_classes(g, pairs[static_cast<std::size_t>(i)]);
    if (jc.class_count() >= 2) built[static_cast<std::size_t>(i)] = std::move(jc);
  }
  std::vector<JoinClasses> out;
  for (auto& b : built) {
    if (b) out.push_back(std::move(*b));
  }
  std::sort(out.begin(), out.end(), [](const JoinClasses& a, const JoinClasses& b) {
    return std::tie(a.min_card, a.pair) < std::tie(b.min_card, b.pair);
  });
  return out;
}

GeneratingSet minimal_generating_set(const Graph& g, std::optional<int> base_edge, std::optional<std::uint64_t> seed) {
  if (g.edge_count() < 2) throw Error(ErrorKind::Precondition, "trivial ideal: the graph has fewer than 2 edges");
  return minimal_generating_set(g, enumerate_tg_star(g), base_edge, seed);
}

GeneratingSet minimal_generating_set(const Graph& g, const std::vector<JoinClasses>& tg_star,
                                     std::optional<int> base_edge, std::optional<std::uint64_t> seed) {
  const int s = g.edge_count();
  if (s < 2) throw Error(ErrorKind::Precondition, "trivial ideal: the graph has fewer than 2 edges");
  std::mt19937_64 rng(seed.value_or(0));
  auto pick = [&](std::size_t n) -> std::size_t {
    if (!seed) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };

  GeneratingSet out;
  if (base_edge) {
    if (*base_edge < 0 || *base_edge >= s) throw Error(ErrorKind::Precondition, "base edge out of range");
    out.base_edge = *base_edge;
  } else {
    out.base_edge = seed ? static_cast<int>(pick(static_cast<std::size_t>(s))) : 0;
  }
  for (int e = 0; e < s; ++e) {
    if (e == out.base_edge) continue;
    out.square_binomials.emplace_back(Monomial::square(s, e), Monomial::square(s, out.base_edge));
  }
  out.degrees[2] += s - 1;

  for (const auto& jc : tg_star) {
    std::vector<EdgeSet> reps;
    for (const auto& cls : jc.classes) reps.push_back(seed ? cls[pick(cls.size())] : cls.front());
    const std::size_t anchor_slot = pick(reps.size());
    const EdgeSet anchor = reps[anchor_slot];
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (i == anchor_slot) continue;
      out.join_binomials.push_back(
          {jc.pair, reps[i], anchor, Binomial(Monomial::from_set(s, reps[i]), Monomial::from_set(s, anchor))});
      out.degrees[jc.min_card] += 1;
    }
  }
  return out;
}

std::map<int, int> generating_degrees(const Graph& g) { return minimal_generating_set(g).degrees; }

int max_generating_degree(const Graph& g) { return generating_degrees(g).rbegin()->first; }

bool is_required_generator(const Graph& g, const Binomial& b) {
  if (!is_member(g, b)) throw Error(ErrorKind::Precondition, "binomial is not in the ideal");
  const Monomial& a = b.lhs();
  const Monomial& c = b.rhs();
  auto single_square = [](const Monomial& m) {
    return m.degree() == 2 && m.squarefree_part().empty();
  };
  if (single_square(a) && single_square(c)) return true;
  auto squarefree = [](const Monomial& m) { return m.support() == m.squarefree_part(); };
  if (!squarefree(a) || !squarefree(c)) return false;
  const EdgeSet j = a.squarefree_part();
  const EdgeSet k = c.squarefree_part();
  if (!is_min_join(g, j) || !is_min_join(g, k)) return false;
  const JoinClasses jc = build_join_classes(g, classify_join(g, j));
  return jc.class_of(j) != jc.class_of(k);
}

}  // namespace eulermin
