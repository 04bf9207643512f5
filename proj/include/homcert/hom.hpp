#pragma once

#include "homcert/bigint.hpp"
#include "homcert/errors.hpp"
#include "homcert/graph.hpp"

#include <cstdint>
#include <vector>

namespace homcert {

// Three independent exact counters for hom(G, H). They share no code beyond
// the graph types, so mutual agreement is a meaningful check.

/// Exhaustive map enumeration with pruning on already-coloured neighbours.
/// Refuses to run when |V(H)|^|V(G)| exceeds limits.state_budget.
BigCount hom_bruteforce(const Graph& g, const ConstraintGraph& h,
                        const Limits& limits = Limits::defaults());

/// Frontier dynamic programming: vertices are added one at a time in a greedy
/// order that keeps the boundary small, and the table is keyed by the colours
/// of boundary vertices. Throws ResourceError when the table would exceed
/// limits.dp_table_entries.
BigCount hom_dp(const Graph& g, const ConstraintGraph& h,
                const Limits& limits = Limits::defaults());

/// The processing order hom_dp uses.
std::vector<int> elimination_order(const Graph& g);

/// Alternating sum over edge subsets S of G of
///   (-1)^|S| hom(G(S), H^c) |V(H)|^(n - v(S)),
/// with H^c the loop-inclusive complement minus isolated vertices.
/// Requires |E(G)| <= limits.subset_edges.
BigCount hom_inclusion_exclusion(const Graph& g, const ConstraintGraph& h,
                                 const Limits& limits = Limits::defaults());

struct IndepProfile {
  int alpha = 0;                       // independence number
  std::vector<std::uint64_t> counts;   // counts[k] = i_k(G), k = 0..n
  BigCount total() const;
  /// sum_k i_k lambda^k
  BigRational evaluate(const BigRational& lambda) const;
};

IndepProfile indep_profile(const Graph& g);

/// Maximum independent set; among maximum sets the lexicographically first
/// (comparing sorted vertex lists).
VertexSet maximum_independent_set(const Graph& g);

}  // namespace homcert
