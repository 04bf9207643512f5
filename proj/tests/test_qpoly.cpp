#include "homcert/catalog.hpp"
#include "homcert/hom.hpp"
#include "homcert/qpoly.hpp"
#include "homcert/regular.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace homcert;

namespace {

QPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return QPolynomial(v);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const QPolynomial p = poly({0, -3, 6, -4, 1});
  CHECK(p.to_string() == "q^4 - 4q^3 + 6q^2 - 3q");
  CHECK(p.degree() == 4);
  CHECK(p(BigInt(3)) == 18);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({}).degree() == -1);
  CHECK(poly({}).to_string() == "0");
  CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
  CHECK((p - p).is_zero());
  CHECK(QPolynomial::monomial(BigInt(2), 3) == poly({0, 0, 0, 2}));
}

TEST_CASE("polynomial JSON round trip") {
  const QPolynomial p = poly({5, 0, -7, 1});
  CHECK(p.to_json() == R"({"coeffs":[5,0,-7,1]})");
  CHECK(QPolynomial::from_json(p.to_json()) == p);
  const QPolynomial big(std::vector<BigInt>{pow(BigInt(10), 30), BigInt(-1)});
  CHECK(QPolynomial::from_json(big.to_json()) == big);
  CHECK(QPolynomial::from_json(R"({"coeffs":["12", -3]})") == poly({12, -3}));
  CHECK_THROWS(QPolynomial::from_json(R"({"coeffs":[1.5]})"));
  CHECK_THROWS(QPolynomial::from_json("[1,2]"));
}

TEST_CASE("worked polynomial values") {
  const Graph k2 = complete_graph(2);
  CHECK(qpoly_deleted_loops(k2, 1) == poly({-1, 0, 1}));
  CHECK(qpoly_deleted_loops(k2, 0) == poly({0, 0, 1}));
  CHECK(qpoly_deleted_loops(complete_bipartite(2, 2), 0) == poly({0, 0, 0, 0, 1}));
  CHECK(qpoly_bipartite_deletion(k2, DeletionSpec{{{1, 1}}}) == poly({-2, 0, 1}));
  CHECK(qpoly_bipartite_deletion(complete_graph(3), DeletionSpec{{{1, 1}}}) == poly({6, -6, 0, 1}));
  CHECK(qpoly_bipartite_deletion(cycle_graph(4), DeletionSpec{{{1, 1}}})(BigInt(3)) == 35);
  CHECK(chromatic_polynomial(cycle_graph(4)) == poly({0, -3, 6, -4, 1}));
  CHECK(chromatic_polynomial(complete_graph(3)) == poly({0, 2, -3, 1}));
  CHECK(chromatic_polynomial(cycle_graph(5))(BigInt(3)) == 30);
  CHECK(broken_circuit_coefficients(cycle_graph(4)) == std::vector<BigInt>{1, 4, 6, 3});
  CHECK(broken_circuit_coefficients(complete_graph(3)) == std::vector<BigInt>{1, 3, 2});
  CHECK_THROWS_AS(qpoly_bipartite_deletion(k2, DeletionSpec{}), std::invalid_argument);
}

TEST_CASE("polynomials agree with direct counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(2 + trial % 5, 0.5, rng);
    const QPolynomial chrom = chromatic_polynomial(g);
    CHECK(chrom.coeffs() == oracle::chromatic_by_interpolation(g));
    for (int q = 2; q <= 6; ++q) {
      CHECK(chrom(BigInt(q)) == hom_dp(g, complete_loopless(q)));
      for (int l = 0; l <= q; ++l)
        CHECK(qpoly_deleted_loops(g, l)(BigInt(q)) == hom_dp(g, deleted_loops(q, l)));
    }
    const std::vector<DeletionSpec> specs = {
        {{{1, 1}}}, {{{1, 2}}}, {{{2, 2}}}, {{{1, 1}, {1, 1}}}, {{{1, 2}, {1, 1}}}};
    for (const auto& spec : specs) {
      const QPolynomial p = qpoly_bipartite_deletion(g, spec);
      for (int q = spec.vertices(); q <= spec.vertices() + 3; ++q)
        CHECK(p(BigInt(q)) == hom_dp(g, bipartite_deletion_graph(q, spec)));
    }
  }
}

TEST_CASE("deleting all loops gives the chromatic polynomial") {
  for (const Graph& g : {cycle_graph(5), complete_bipartite(2, 3), complete_graph(4), path_graph(5)}) {
    const QPolynomial chrom = chromatic_polynomial(g);
    for (int q = 2; q <= 6; ++q) CHECK(qpoly_deleted_loops(g, q)(BigInt(q)) == chrom(BigInt(q)));
  }
}

TEST_CASE("broken circuits are independent of the edge order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(3 + trial % 5, 0.55, rng);
    const auto coeffs = chromatic_polynomial(g).coeffs();
    const int n = g.order();
    std::vector<BigInt> want(n);
    for (int i = 0; i < n; ++i) {
      want[i] = coeffs[n - i];
      if (i % 2 == 1) want[i] = -want[i];
    }
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(broken_circuit_coefficients(g, order) == want);
    }
  }
  CHECK_THROWS_AS(broken_circuit_coefficients(cycle_graph(4), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("chromatic coefficients for regular graphs") {
  for (int d = 2; d <= 3; ++d) {
    for (int n = d + 1; n <= 8; ++n) {
      if (n * d % 2 != 0) continue;
      for (const Graph& g : enumerate_regular(n, d, false)) {
        const auto a = broken_circuit_coefficients(g);
        const long edges = n * d / 2;
        CHECK(a[1] == edges);
        if (n > 2) CHECK(a[2] == BigInt(edges * (edges - 1) / 2) - count_c3(g));
      }
    }
  }
}

TEST_CASE("family parsing") {
  CHECK(Family::parse("chromatic").kind == Family::Kind::Chromatic);
  const Family l = Family::parse("loops:2");
  CHECK(l.kind == Family::Kind::DeletedLoops);
  CHECK(l.loops_deleted == 2);
  const Family b = Family::parse("bip:1x2,1x1");
  CHECK(b.kind == Family::Kind::BipartiteDeletion);
  CHECK(b.spec.pairs == std::vector<std::pair<int, int>>{{1, 2}, {1, 1}});
  CHECK(b.name() == "bip:1x2,1x1");
  CHECK_THROWS_AS(Family::parse("loops:x"), std::invalid_argument);
  CHECK_THROWS_AS(Family::parse("bip:"), std::invalid_argument);
  CHECK_THROWS_AS(Family::parse("colour"), std::invalid_argument);
}

TEST_CASE("thresholds") {
  const Graph ref = catalog_graph("2*Kdd:2");
  const auto t = threshold_q(ref, cycle_graph(8), Family::chromatic());
  CHECK(t.kind == Threshold::Kind::Finite);
  CHECK(t.q0 == 2);
  const auto same = threshold_q(ref, ref, Family::chromatic());
  CHECK(same.kind == Threshold::Kind::Tie);

  const auto bip = threshold_q(copies(complete_graph(3), 2), cycle_graph(6),
                               Family::bipartite_deletion(DeletionSpec{{{1, 1}}}));
  CHECK(bip.kind == Threshold::Kind::Finite);
  CHECK(bip.difference == poly({26, -36, 12}));

  // negative leading coefficient: never
  const auto never = threshold_q(poly({0, 1}), poly({0, 0, 1}));
  CHECK(never.kind == Threshold::Kind::Never);
  // every integer q >= q0 is positive and q0 - 1 is not
  const auto shifted = threshold_q(poly({0, 0, 1}), poly({30, 1}));
  REQUIRE(shifted.kind == Threshold::Kind::Finite);
  CHECK(shifted.q0 == 7);
  for (unsigned long q = shifted.q0; q < 40; ++q) CHECK(shifted.difference(BigInt(q)) > 0);
}
