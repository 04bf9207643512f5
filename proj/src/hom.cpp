#include "homcert/hom.hpp"

#include <array>
#include <limits>
#include <unordered_map>

namespace homcert {

namespace {

bool is_zero(std::uint64_t x) { return x == 0; }
bool is_zero(const BigCount& x) { return sgn(x) == 0; }

BigCount to_big(std::uint64_t x) {
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return out;
}

// Counts homomorphisms by sweeping `order`. The frontier holds processed
// vertices that still have an unprocessed neighbour; the table is indexed by
// their colours in base k (position i has weight k^i).
template <class Count>
Count frontier_count(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                     std::uint64_t cap) {
  const int k = h.order();
  if (g.order() == 0) return Count(1);
  if (k == 0) return Count(0);

  std::vector<int> frontier;
  std::vector<Count> table(1, Count(1));
  VertexSet processed = 0;

  for (int v : order) {
    processed |= bit(v);
    std::vector<int> next;
    std::vector<std::uint64_t> keep_weight(frontier.size(), 0);
    std::vector<int> neighbour_pos;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int w = frontier[i];
      if (g.adjacent(v, w)) neighbour_pos.push_back(static_cast<int>(i));
      if ((g.neighbors(w) & ~processed) != 0) next.push_back(w);
    }
    const bool v_stays = (g.neighbors(v) & ~processed) != 0;
    const std::size_t width = next.size() + (v_stays ? 1 : 0);
    const std::uint64_t size = saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(width));
    if (size > cap) {
      throw ResourceError("dp_table_entries", "frontier of " + std::to_string(width) +
                                                  " vertices needs " + std::to_string(k) + "^" +
                                                  std::to_string(width) + " table entries");
    }
    {
      std::uint64_t weight = 1;
      std::size_t j = 0;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (j < next.size() && next[j] == frontier[i]) {
          keep_weight[i] = weight;
          weight *= static_cast<std::uint64_t>(k);
          ++j;
        }
      }
    }
    const std::uint64_t v_weight = saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(next.size()));
    if (v_stays) next.push_back(v);

    std::vector<Count> out(size, Count(0));
    std::array<int, kMaxOrder> digit{};
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
      if (is_zero(table[idx])) continue;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        digit[i] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
        rest /= static_cast<std::uint64_t>(k);
      }
      VertexSet allowed = h.vertices();
      for (int p : neighbour_pos) allowed &= h.neighbors(digit[p]);
      if (allowed == 0) continue;
      std::uint64_t base = 0;
      for (std::size_t i = 0; i < frontier.size(); ++i) base += keep_weight[i] * static_cast<std::uint64_t>(digit[i]);
      if (!v_stays) {
        out[base] += table[idx] * static_cast<unsigned long>(popcount(allowed));
      } else {
        for (VertexSet c = allowed; c != 0; c &= c - 1) {
          out[base + static_cast<std::uint64_t>(lowest(c)) * v_weight] += table[idx];
        }
      }
    }
    table = std::move(out);
    frontier = std::move(next);
  }
  return table[0];
}

BigCount count_exact(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                     std::uint64_t cap) {
  // Partial counts never exceed k^n, so 64-bit cells suffice when that fits.
  const auto bound = saturating_pow(static_cast<std::uint64_t>(h.order()), static_cast<unsigned>(g.order()));
  if (bound < std::numeric_limits<std::uint64_t>::max() / 2) {
    return to_big(frontier_count<std::uint64_t>(g, h, order, cap));
  }
  return frontier_count<BigCount>(g, h, order, cap);
}

}  // namespace

// ---------------------------------------------------------------- brute force

BigCount hom_bruteforce(const Graph& g, const ConstraintGraph& h, const Limits& limits) {
  const int n = g.order();
  const int k = h.order();
  const auto states = saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
  if (states > limits.state_budget) {
    throw ResourceError("state_budget", std::to_string(k) + "^" + std::to_string(n) +
                                            " maps exceed the brute-force budget of " +
                                            std::to_string(limits.state_budget));
  }
  if (n == 0) return BigCount(1);

  std::array<int, kMaxOrder> colour{};
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, int i) -> void {
    VertexSet allowed = h.vertices();
    for (VertexSet s = g.neighbors(i) & prefix_mask(i); s != 0; s &= s - 1) {
      allowed &= h.neighbors(colour[lowest(s)]);
    }
    if (i == n - 1) {
      count += static_cast<std::uint64_t>(popcount(allowed));
      return;
    }
    for (; allowed != 0; allowed &= allowed - 1) {
      colour[i] = lowest(allowed);
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return to_big(count);
}

// ---------------------------------------------------------------- frontier DP

std::vector<int> elimination_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> order;
  order.reserve(n);
  VertexSet processed = 0;
  VertexSet frontier = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_width = 0;
    int best_back = 0;
    for (VertexSet cand = g.vertices() & ~processed; cand != 0; cand &= cand - 1) {
      const int v = lowest(cand);
      const VertexSet after = processed | bit(v);
      VertexSet next = 0;
      for (VertexSet f = frontier | bit(v); f != 0; f &= f - 1) {
        const int w = lowest(f);
        if ((g.neighbors(w) & ~after) != 0) next |= bit(w);
      }
      const int width = popcount(next);
      const int back = popcount(g.neighbors(v) & processed);
      if (best < 0 || width < best_width || (width == best_width && back > best_back)) {
        best = v;
        best_width = width;
        best_back = back;
      }
    }
    processed |= bit(best);
    VertexSet next = 0;
    for (VertexSet f = frontier | bit(best); f != 0; f &= f - 1) {
      const int w = lowest(f);
      if ((g.neighbors(w) & ~processed) != 0) next |= bit(w);
    }
    frontier = next;
    order.push_back(best);
  }
  return order;
}

BigCount hom_dp(const Graph& g, const ConstraintGraph& h, const Limits& limits) {
  return count_exact(g, h, elimination_order(g), limits.dp_table_entries);
}

// ---------------------------------------------------------------- inclusion-exclusion

BigCount hom_inclusion_exclusion(const Graph& g, const ConstraintGraph& h, const Limits& limits) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > limits.subset_edges || m > 62) {
    throw ResourceError("subset_edges", std::to_string(m) + " edges exceed the 2^" +
                                            std::to_string(limits.subset_edges) + " subset guard");
  }
  const int n = g.order();
  const ConstraintGraph hc = h.complement().normalized().graph;

  std::vector<BigCount> power(n + 1);
  power[0] = 1;
  for (int i = 1; i <= n; ++i) power[i] = power[i - 1] * static_cast<unsigned long>(h.order());

  // hom(component, H^c) keyed by the component's edge mask.
  std::unordered_map<std::uint64_t, BigCount> memo;
  auto component_count = [&](std::uint64_t edge_mask) -> const BigCount& {
    if (auto it = memo.find(edge_mask); it != memo.end()) return it->second;
    if (memo.size() > (1U << 20)) memo.clear();
    std::array<int, kMaxOrder> index;
    index.fill(-1);
    std::vector<Edge> local;
    int next = 0;
    for (std::uint64_t s = edge_mask; s != 0; s &= s - 1) {
      const Edge& e = edges[std::countr_zero(s)];
      if (index[e.u] < 0) index[e.u] = next++;
      if (index[e.v] < 0) index[e.v] = next++;
      local.push_back({index[e.u], index[e.v]});
    }
    const Graph piece = Graph::from_edges(next, local);
    return memo.emplace(edge_mask, count_exact(piece, hc, elimination_order(piece), limits.dp_table_entries))
        .first->second;
  };

  BigInt total = 0;
  std::array<VertexSet, kMaxOrder> rows{};
  std::vector<VertexSet> comps;
  std::vector<std::uint64_t> comp_edges;
  BigCount product;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    rows.fill(0);
    VertexSet spanned = 0;
    for (std::uint64_t s = mask; s != 0; s &= s - 1) {
      const Edge& e = edges[std::countr_zero(s)];
      rows[e.u] |= bit(e.v);
      rows[e.v] |= bit(e.u);
      spanned |= bit(e.u) | bit(e.v);
    }
    comps.clear();
    for (VertexSet unseen = spanned; unseen != 0;) {
      VertexSet comp = bit(lowest(unseen));
      VertexSet frontier = comp;
      while (frontier != 0) {
        VertexSet grow = 0;
        for (VertexSet f = frontier; f != 0; f &= f - 1) grow |= rows[lowest(f)];
        frontier = grow & ~comp;
        comp |= grow;
      }
      comps.push_back(comp);
      unseen &= ~comp;
    }
    comp_edges.assign(comps.size(), 0);
    for (std::uint64_t s = mask; s != 0; s &= s - 1) {
      const int idx = std::countr_zero(s);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c] & bit(edges[idx].u)) {
          comp_edges[c] |= std::uint64_t{1} << idx;
          break;
        }
      }
    }
    product = power[n - popcount(spanned)];
    for (std::uint64_t ce : comp_edges) {
      const BigCount& c = component_count(ce);
      if (sgn(c) == 0) {
        product = 0;
        break;
      }
      product *= c;
    }
    if (std::popcount(mask) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

// ---------------------------------------------------------------- independent sets

BigCount IndepProfile::total() const {
  BigCount sum = 0;
  for (auto c : counts) sum += to_big(c);
  return sum;
}

BigRational IndepProfile::evaluate(const BigRational& lambda) const {
  BigRational sum = 0;
  BigRational power = 1;
  for (auto c : counts) {
    sum += BigRational(to_big(c)) * power;
    power *= lambda;
  }
  return sum;
}

IndepProfile indep_profile(const Graph& g) {
  const int n = g.order();
  IndepProfile profile;
  profile.counts.assign(static_cast<std::size_t>(n) + 1, 0);

  std::vector<std::vector<std::uint64_t>> choose(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    choose[a][0] = 1;
    for (int b = 1; b <= a; ++b) choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
  }

  // Branch on a vertex of maximum degree inside the candidate set; once the
  // candidates are pairwise non-adjacent every subset is independent.
  auto count = [&](auto&& self, VertexSet cand, int size) -> void {
    int pivot = -1;
    int pivot_degree = 0;
    for (VertexSet s = cand; s != 0; s &= s - 1) {
      const int v = lowest(s);
      const int deg = popcount(g.neighbors(v) & cand);
      if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    if (pivot < 0) {
      const int free = popcount(cand);
      for (int j = 0; j <= free; ++j) profile.counts[size + j] += choose[free][j];
      return;
    }
    self(self, cand & ~bit(pivot), size);
    self(self, cand & ~bit(pivot) & ~g.neighbors(pivot), size + 1);
  };
  count(count, g.vertices(), 0);

  for (int k = n; k >= 0; --k) {
    if (profile.counts[k] != 0) {
      profile.alpha = k;
      break;
    }
  }
  return profile;
}

VertexSet maximum_independent_set(const Graph& g) {
  VertexSet best = 0;
  int best_size = -1;
  // Include-first search over increasing vertices meets maximum sets in
  // lexicographic order; only strict improvements replace the incumbent.
  auto search = [&](auto&& self, VertexSet current, VertexSet cand) -> void {
    if (popcount(current) + popcount(cand) <= best_size) return;
    if (cand == 0) {
      best = current;
      best_size = popcount(current);
      return;
    }
    const int v = lowest(cand);
    self(self, current | bit(v), cand & ~bit(v) & ~g.neighbors(v));
    self(self, current, cand & ~bit(v));
  };
  search(search, 0, g.vertices());
  return best;
}

}  // namespace homcert
