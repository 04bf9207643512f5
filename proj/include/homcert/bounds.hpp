#pragma once

#include "homcert/bigint.hpp"
#include "homcert/closed_forms.hpp"
#include "homcert/errors.hpp"
#include "homcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcert {

struct OrderingProfile {
  std::vector<int> order;                  // order[i] is the vertex in position i
  std::vector<int> back_degree;            // p(v): neighbours placed before v, by vertex
  std::vector<BigRational> histogram;      // histogram[i]: fraction of vertices with p(v) = i
};

/// `order` must be a permutation of V(G).
OrderingProfile ordering_profile(const Graph& g, std::vector<int> order);

/// The lexicographically first maximum independent set in increasing order,
/// then the other vertices shuffled by mt19937_64(seed).
OrderingProfile ordering_heuristic(const Graph& g, std::uint64_t seed);

/// hom(G,H)^d against the product of hom(K_{p,p},H) over p(v) > 0.
struct BoundCertificate {
  int d = 0;
  std::vector<int> order;
  std::string strategy;
  std::uint64_t seed = 0;
  BigCount hom;
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
};

/// G must be regular with d >= 1.
BoundCertificate mt_bound(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                          const Limits& limits = Limits::defaults());
/// Same, reusing a known hom(G,H).
BoundCertificate mt_bound(const Graph& g, const ConstraintGraph& h, const std::vector<int>& order,
                          const BigCount& hom, const Limits& limits = Limits::defaults());

enum class OrderingStrategy { Natural, Heuristic, ReverseDegeneracy };
const char* to_string(OrderingStrategy s);

/// Vertices in reverse of a minimum-degree elimination order.
std::vector<int> reverse_degeneracy_order(const Graph& g);

/// Smallest rhs over the strategies; Heuristic runs `trials` restarts with
/// seeds seed, seed+1, ... Ties keep the earlier strategy, then the lower seed.
BoundCertificate best_bound(const Graph& g, const ConstraintGraph& h,
                            const std::vector<OrderingStrategy>& strategies, int trials,
                            std::uint64_t seed = 0, const Limits& limits = Limits::defaults());

/// hom(G,H)^{d+1} against hom(K_{d+1},H)^n for H of complete type with m = n > 1.
struct GapReport {
  int n = 0;
  int d = 0;
  int independence = 0;       // alpha(G) * n as a vertex count
  BigRational gamma;          // alpha - 1/(d+1)
  BigCount lhs;
  BigCount rhs;
  Dominance winner = Dominance::Equal;  // Bipartite: hom side larger; Clique: K_{d+1} side larger
  bool divisible = false;     // (d+1) | n
  ConjectureVerdict both_bounds;
};

GapReport gap_report(const Graph& g, const ConstraintGraph& h, const Limits& limits = Limits::defaults());

}  // namespace homcert
