#include "homcert/catalog.hpp"
#include "homcert/hom.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homcert;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

ConstraintGraph random_constraint(int k, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  ConstraintGraph h(k);
  for (int u = 0; u < k; ++u)
    for (int v = u; v < k; ++v)
      if (coin(rng)) h.add_edge(u, v);
  return h;
}

}  // namespace

TEST_CASE("three counters agree with the naive oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(2 + trial % 6, 0.5, rng);
    const ConstraintGraph h = random_constraint(1 + trial % 4, rng);
    if (h.has_isolated_vertex()) continue;
    const BigCount want(std::to_string(oracle::hom_naive(g, h)));
    CHECK(hom_bruteforce(g, h) == want);
    CHECK(hom_dp(g, h) == want);
    CHECK(hom_inclusion_exclusion(g, h) == want);
  }
}

TEST_CASE("known homomorphism counts") {
  CHECK(hom_dp(cycle_graph(5), complete_loopless(3)) == 30);
  CHECK(hom_bruteforce(cycle_graph(5), complete_loopless(3)) == 30);
  CHECK(hom_inclusion_exclusion(cycle_graph(5), complete_loopless(3)) == 30);
  CHECK(hom_dp(complete_bipartite(2, 2), widom_rowlinson()) == 35);
  CHECK(hom_dp(complete_graph(3), widom_rowlinson()) == 15);
  CHECK(hom_dp(complete_graph(4), widom_rowlinson()) == 31);
  CHECK(hom_dp(complete_bipartite(2, 2), independent_set_graph()) == 7);
  // E_k^o: k^components
  CHECK(hom_dp(copies(complete_graph(3), 2), looped_isolated(2)) == 4);
  CHECK(hom_dp(cycle_graph(9), looped_isolated(3)) == 3);
  // complete looped: k^n
  CHECK(hom_dp(catalog_graph("Kdd:3"), complete_looped(3)) == 729);
  // empty source graph
  CHECK(hom_dp(Graph(0), widom_rowlinson()) == 1);
  CHECK(hom_inclusion_exclusion(Graph(3), widom_rowlinson()) == 27);
}

TEST_CASE("dp switches to big integers when k^n overflows") {
  // K_q proper colourings of C_16 at q = 20: (q-1)^16 + (q-1)
  const Graph c16 = cycle_graph(16);
  const BigCount want = pow(BigInt(19), 16) + 19;
  ConstraintGraph k20(20);
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v) k20.add_edge(u, v);
  CHECK(hom_dp(c16, k20) == want);
  // complete looped on 16 vertices, 24 source vertices: 16^24 > 2^64
  CHECK(hom_dp(copies(cycle_graph(4), 6), complete_looped(16)) == pow(BigInt(16), 24));
}

TEST_CASE("resource guards refuse instead of degrading") {
  Limits tight = Limits::defaults().with_guard_limit(1000);
  const Graph g = cycle_graph(8);
  const ConstraintGraph h = complete_looped(3);
  try {
    hom_bruteforce(g, h, tight);  // 3^8 = 6561 > 1000
    FAIL("expected a guard");
  } catch (const ResourceError& e) {
    CHECK(e.guard() == "state_budget");
  }
  Limits few_edges = Limits::defaults();
  few_edges.subset_edges = 5;
  try {
    hom_inclusion_exclusion(g, h, few_edges);
    FAIL("expected a guard");
  } catch (const ResourceError& e) {
    CHECK(e.guard() == "subset_edges");
  }
  Limits small_table = Limits::defaults();
  small_table.dp_table_entries = 4;
  try {
    hom_dp(complete_graph(5), complete_looped(3), small_table);
    FAIL("expected a guard");
  } catch (const ResourceError& e) {
    CHECK(e.guard() == "dp_table_entries");
  }
}

TEST_CASE("elimination order is a permutation") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + trial % 12, 0.3, rng);
    auto order = elimination_order(g);
    std::sort(order.begin(), order.end());
    for (int v = 0; v < g.order(); ++v) CHECK(order[v] == v);
  }
}

TEST_CASE("independent set profile") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + trial % 12, 0.35, rng);
    const auto p = indep_profile(g);
    const auto want = oracle::independent_sets_naive(g);
    CHECK(p.counts == want);
    int alpha = 0;
    for (std::size_t k = 0; k < want.size(); ++k)
      if (want[k] > 0) alpha = static_cast<int>(k);
    CHECK(p.alpha == alpha);
    CHECK(popcount(maximum_independent_set(g)) == alpha);
    // total equals hom(G, H_ind)
    CHECK(p.total() == hom_dp(g, independent_set_graph()));
  }
  // lexicographically first maximum set
  CHECK(maximum_independent_set(cycle_graph(4)) == 0b0101);
  CHECK(maximum_independent_set(copies(complete_graph(3), 2)) == 0b001001);
  CHECK(indep_profile(cycle_graph(4)).evaluate(BigRational(1, 2)) == BigRational(1) + BigRational(2) + BigRational(1, 2));
}
