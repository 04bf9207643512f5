#include "homcert/bounds.hpp"

#include "homcert/hom.hpp"
#include "homcert/structure.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace homcert {

OrderingProfile ordering_profile(const Graph& g, std::vector<int> order) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("ordering has the wrong length");
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]++) throw std::invalid_argument("ordering is not a permutation");
  }
  OrderingProfile p;
  p.back_degree.assign(n, 0);
  VertexSet placed = 0;
  int top = 0;
  for (int v : order) {
    p.back_degree[v] = popcount(g.neighbors(v) & placed);
    top = std::max(top, p.back_degree[v]);
    placed |= bit(v);
  }
  p.order = std::move(order);
  std::vector<long> counts(top + 1, 0);
  for (int b : p.back_degree) ++counts[b];
  for (long c : counts) p.histogram.emplace_back(c, std::max(n, 1));
  for (auto& x : p.histogram) x.canonicalize();
  return p;
}

OrderingProfile ordering_heuristic(const Graph& g, std::uint64_t seed) {
  const VertexSet indep = maximum_independent_set(g);
  std::vector<int> order;
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v) (indep & bit(v) ? order : rest).push_back(v);
  std::mt19937_64 rng(seed);
  std::shuffle(rest.begin(), rest.end(), rng);
  order.insert(order.end(), rest.begin(), rest.end());
  return ordering_profile(g, std::move(order));
}

BoundCertificate mt_bound(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                          const BigCount& hom, const Limits& limits) {
  const auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("mt_bound: G is not regular");
  if (*d < 1) throw std::invalid_argument("mt_bound: d must be at least 1");
  const auto profile = ordering_profile(g, order);

  BoundCertificate c;
  c.d = *d;
  c.order = order;
  c.hom = hom;
  c.lhs = pow(hom, static_cast<unsigned long>(*d));
  c.rhs = 1;
  std::map<int, BigCount> factor;
  for (int p : profile.back_degree) {
    if (p == 0) continue;
    auto it = factor.find(p);
    if (it == factor.end()) it = factor.emplace(p, hom_kdd(h, static_cast<unsigned>(p), limits)).first;
    c.rhs *= it->second;
  }
  c.holds = c.lhs <= c.rhs;
  return c;
}

BoundCertificate mt_bound(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                          const Limits& limits) {
  return mt_bound(g, h, order, hom_dp(g, h, limits), limits);
}

const char* to_string(OrderingStrategy s) {
  switch (s) {
    case OrderingStrategy::Natural: return "natural";
    case OrderingStrategy::Heuristic: return "heuristic";
    case OrderingStrategy::ReverseDegeneracy: return "reverse-degeneracy";
  }
  return "?";
}

std::vector<int> reverse_degeneracy_order(const Graph& g) {
  std::vector<int> removed;
  VertexSet left = g.vertices();
  while (left != 0) {
    int best = lowest(left);
    for (VertexSet s = left; s != 0; s &= s - 1) {
      const int v = lowest(s);
      if (popcount(g.neighbors(v) & left) < popcount(g.neighbors(best) & left)) best = v;
    }
    removed.push_back(best);
    left &= ~bit(best);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

BoundCertificate best_bound(const Graph& g, const ConstraintGraph& h,
                            const std::vector<OrderingStrategy>& strategies, int trials,
                            std::uint64_t seed, const Limits& limits) {
  if (trials < 1) throw std::invalid_argument("best_bound: trials must be at least 1");
  if (strategies.empty()) throw std::invalid_argument("best_bound: no ordering strategy given");
  const BigCount hom = hom_dp(g, h, limits);
  std::optional<BoundCertificate> best;
  const auto offer = [&](BoundCertificate c) {
    if (!best || c.rhs < best->rhs) best = std::move(c);
  };
  for (OrderingStrategy s : strategies) {
    switch (s) {
      case OrderingStrategy::Natural: {
        std::vector<int> order(g.order());
        for (int v = 0; v < g.order(); ++v) order[v] = v;
        auto c = mt_bound(g, h, order, hom, limits);
        c.strategy = to_string(s);
        offer(std::move(c));
        break;
      }
      case OrderingStrategy::ReverseDegeneracy: {
        auto c = mt_bound(g, h, reverse_degeneracy_order(g), hom, limits);
        c.strategy = to_string(s);
        offer(std::move(c));
        break;
      }
      case OrderingStrategy::Heuristic:
        for (int t = 0; t < trials; ++t) {
          auto c = mt_bound(g, h, ordering_heuristic(g, seed + t).order, hom, limits);
          c.strategy = to_string(s);
          c.seed = seed + t;
          offer(std::move(c));
        }
        break;
    }
  }
  return *best;
}

GapReport gap_report(const Graph& g, const ConstraintGraph& h, const Limits& limits) {
  const auto d = g.regular_degree();
  if (!d || *d < 1) throw std::invalid_argument("gap_report: G must be d-regular with d >= 1");
  const auto profile = structural_profile(h, limits);
  const auto verdict = classify_profile(profile);
  if (verdict.kind != HType::Complete || profile.m != profile.n || profile.m <= 1) {
    throw std::invalid_argument("gap_report: H must be of complete type with m = n > 1");
  }
  GapReport r;
  r.n = g.order();
  r.d = *d;
  r.independence = popcount(maximum_independent_set(g));
  r.gamma = BigRational(r.independence, r.n) - BigRational(1, r.d + 1);
  r.gamma.canonicalize();
  const BigCount hom = hom_dp(g, h, limits);
  const BigCount kdp1 = hom_kdp1(h, static_cast<unsigned>(r.d), limits);
  r.lhs = pow(hom, static_cast<unsigned long>(r.d + 1));
  r.rhs = pow(kdp1, static_cast<unsigned long>(r.n));
  const int c = compare(r.lhs, r.rhs);
  r.winner = c > 0 ? Dominance::Bipartite : c < 0 ? Dominance::Clique : Dominance::Equal;
  r.divisible = r.n % (r.d + 1) == 0;
  r.both_bounds = conjecture_rhs_compare(r.n, r.d, hom, hom_kdd(h, static_cast<unsigned>(r.d), limits), kdp1);
  return r;
}

}  // namespace homcert
