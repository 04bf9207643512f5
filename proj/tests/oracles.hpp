#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// None of them call the library's counting, canonical-form or enumeration
// code; they only read adjacency through Graph / ConstraintGraph.

#include "homcert/bigint.hpp"
#include "homcert/graph.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using homcert::BigInt;
using homcert::BigRational;
using homcert::ConstraintGraph;
using homcert::Graph;
using homcert::VertexSet;

/// Every map V(G) -> V(H) via an odometer, no pruning.
std::uint64_t hom_naive(const Graph& g, const ConstraintGraph& h);

std::uint64_t c3_naive(const Graph& g);
std::uint64_t c4_naive(const Graph& g);
std::uint64_t p4_naive(const Graph& g);

/// counts[k] = number of independent k-sets, by scanning all subsets.
std::vector<std::uint64_t> independent_sets_naive(const Graph& g);

/// Onto maps {1..d} -> {1..r}, by enumeration.
std::uint64_t surjections_naive(unsigned d, unsigned r);

struct Pair {
  VertexSet a = 0;
  VertexSet b = 0;
};
/// All ordered (A,B), both nonempty, every A-B pair adjacent (4^k scan).
std::vector<Pair> bipartite_images_naive(const ConstraintGraph& h);
/// All (A,B): A nonempty looped clique, B unlooped clique, disjoint, fully joined.
std::vector<Pair> complete_images_naive(const ConstraintGraph& h);

/// Parameters straight from the definitions over the naive image lists.
struct Profile {
  int eta = 0;
  long long m = 0;
  int a = 0, b = 0;
  long long n = 0;
  bool primed = false;
  VertexSet a0 = 0;
  int eta_p = 0;
  long long m_p = 0;
  int a_p = 0, b_p = 0;
  long long n_p = 0;
};
Profile profile_naive(const ConstraintGraph& h);

/// Chromatic polynomial by interpolating hom_naive(G, K_q) at q = 0..n.
std::vector<BigInt> chromatic_by_interpolation(const Graph& g);

/// Backtracking isomorphism test.
bool isomorphic_naive(const Graph& a, const Graph& b);

/// Labelled d-regular graphs on n vertices, then isomorphism classes by
/// pairwise backtracking. Returns one representative per class.
std::vector<Graph> regular_classes_naive(int n, int d, bool connected);

/// All graphs on n vertices up to isomorphism (n <= 6).
std::vector<Graph> all_graphs_naive(int n);

}  // namespace oracle
