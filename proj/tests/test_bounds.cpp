#include "homcert/bounds.hpp"
#include "homcert/catalog.hpp"
#include "homcert/hom.hpp"
#include "homcert/regular.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace homcert;

namespace {

std::vector<int> natural(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

TEST_CASE("ordering profiles") {
  const auto c4 = ordering_profile(cycle_graph(4), {0, 1, 2, 3});
  CHECK(c4.back_degree == std::vector<int>{0, 1, 1, 2});
  const auto alt = ordering_profile(cycle_graph(4), {0, 2, 1, 3});
  CHECK(alt.back_degree == std::vector<int>{0, 2, 0, 2});
  CHECK(alt.histogram == std::vector<BigRational>{BigRational(1, 2), 0, BigRational(1, 2)});

  // every order of K_{d+1} has one vertex at each back degree
  const auto k5 = ordering_profile(complete_graph(5), {3, 1, 4, 0, 2});
  for (int i = 0; i <= 4; ++i) CHECK(k5.histogram[i] == BigRational(1, 5));

  CHECK_THROWS_AS(ordering_profile(cycle_graph(4), {0, 1, 1, 3}), std::invalid_argument);
}

TEST_CASE("heuristic ordering puts a maximum independent set first") {
  for (int n = 4; n <= 10; ++n) {
    for (const Graph& g : enumerate_regular(n, 3 - n % 2, true)) {
      const int alpha = popcount(maximum_independent_set(g));
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto p = ordering_heuristic(g, seed);
        CHECK(p.histogram[0] * n == alpha);
        const int total = std::accumulate(p.back_degree.begin(), p.back_degree.end(), 0);
        CHECK(static_cast<std::size_t>(total) == g.edge_count());
        std::vector<int> sorted = p.order;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == natural(g));
      }
      CHECK(ordering_heuristic(g, 7).order == ordering_heuristic(g, 7).order);
    }
  }
}

TEST_CASE("bound certificates") {
  const auto c4 = mt_bound(cycle_graph(4), independent_set_graph(), natural(cycle_graph(4)));
  CHECK(c4.hom == 7);
  CHECK(c4.lhs == 49);
  CHECK(c4.rhs == 63);
  CHECK(c4.holds);

  const auto k3 = mt_bound(complete_graph(3), complete_loopless(3), natural(complete_graph(3)));
  CHECK(k3.lhs == 36);
  CHECK(k3.rhs == 6 * 18);
  CHECK(k3.holds);

  const auto k4 = mt_bound(complete_graph(4), widom_rowlinson(), natural(complete_graph(4)));
  CHECK(k4.hom == 31);
  CHECK(k4.lhs == pow(BigInt(31), 3));
  CHECK(k4.holds);

  // complete looped H: both sides are k^(nd)
  const Graph g = catalog_graph("Kdd:3");
  const auto flat = mt_bound(g, complete_looped(3), natural(g));
  CHECK(flat.lhs == flat.rhs);

  CHECK_THROWS_AS(mt_bound(path_graph(3), widom_rowlinson(), natural(path_graph(3))),
                  std::invalid_argument);
}

TEST_CASE("best bound keeps the smallest right-hand side") {
  const Graph g = cycle_graph(6);
  const auto best = best_bound(g, independent_set_graph(),
                               {OrderingStrategy::Natural, OrderingStrategy::Heuristic,
                                OrderingStrategy::ReverseDegeneracy},
                               4, 11);
  for (const auto& order : {natural(g), reverse_degeneracy_order(g)})
    CHECK(best.rhs <= mt_bound(g, independent_set_graph(), order).rhs);
  for (std::uint64_t s = 11; s < 15; ++s)
    CHECK(best.rhs <= mt_bound(g, independent_set_graph(), ordering_heuristic(g, s).order).rhs);
  CHECK(best.holds);
  const auto again = best_bound(g, independent_set_graph(),
                                {OrderingStrategy::Natural, OrderingStrategy::Heuristic,
                                 OrderingStrategy::ReverseDegeneracy},
                                4, 11);
  CHECK(again.order == best.order);
  CHECK(again.strategy == best.strategy);
}

TEST_CASE("gap report") {
  const auto two_triangles = gap_report(copies(complete_graph(3), 2), widom_rowlinson());
  CHECK(two_triangles.divisible);
  CHECK(two_triangles.winner == Dominance::Equal);
  CHECK(two_triangles.lhs == two_triangles.rhs);

  const auto c6 = gap_report(cycle_graph(6), widom_rowlinson());
  CHECK(c6.independence == 3);
  CHECK(c6.gamma == BigRational(1, 2) - BigRational(1, 3));
  // hom(C_6, H_WR) = tr(A^6) with eigenvalues 1, 1 +- sqrt 2: 1 + 2 * 99
  CHECK(c6.lhs == pow(BigInt(199), 3));
  CHECK(c6.rhs == pow(BigInt(15), 6));
  CHECK(c6.winner == Dominance::Clique);

  CHECK_THROWS_AS(gap_report(cycle_graph(6), independent_set_graph()), std::invalid_argument);
}
