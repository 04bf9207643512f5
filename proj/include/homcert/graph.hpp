#pragma once

#include "homcert/bigint.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homcert {

inline constexpr int kMaxOrder = 32;

/// A set of vertices of a graph with at most 32 vertices; bit i is vertex i.
using VertexSet = std::uint32_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet prefix_mask(int n) { return n >= 32 ? ~VertexSet{0} : bit(n) - 1; }

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple loopless graph on vertices 0..n-1 (the source graph G).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  VertexSet vertices() const { return prefix_mask(order_); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  std::optional<int> regular_degree() const;
  std::vector<VertexSet> components() const;
  bool connected() const;

  /// Subgraph induced on `keep`, relabelled in increasing vertex order.
  Graph induced(VertexSet keep) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Finite simple graph with loops allowed (the constraint graph H).
/// A loop at v is the diagonal bit: neighbors(v) contains v.
class ConstraintGraph {
 public:
  ConstraintGraph() = default;
  explicit ConstraintGraph(int order);

  int order() const { return order_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  bool has_loop(int v) const { return adjacent(v, v); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet vertices() const { return prefix_mask(order_); }
  VertexSet looped() const;

  bool is_loopless() const { return looped() == 0; }
  bool is_complete_looped() const;
  bool has_isolated_vertex() const;

  /// Loops count as incidences: a vertex carrying only a loop is not isolated.
  VertexSet isolated() const;

  void add_edge(int u, int v);  // u == v adds a loop

  /// Complement including the diagonal (loop at v iff no loop here).
  ConstraintGraph complement() const;
  ConstraintGraph induced(VertexSet keep) const;

  struct Normalized;
  /// Drops isolated vertices. The result may be empty.
  Normalized normalized() const;

  friend bool operator==(const ConstraintGraph&, const ConstraintGraph&) = default;

 private:
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

struct ConstraintGraph::Normalized {
  ConstraintGraph graph;
  int stripped = 0;
};

// Builders.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(const Graph& g, int times);

// Wire formats. Both are bit-exact.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

struct ParsedConstraint {
  ConstraintGraph graph;
  int stripped = 0;  // isolated vertices removed during normalization
};
/// Format: first line k, then k lines of k characters from {0,1}; the
/// matrix must be symmetric and a diagonal 1 is a loop. Errors carry the
/// 1-based line number as offset.
ParsedConstraint parse_constraint(std::string_view text);
std::string to_constraint_text(const ConstraintGraph& h);

// Local subgraph statistics. Cycles and paths are counted as subgraphs,
// each once regardless of labelling.
BigCount count_c3(const Graph& g);
BigCount count_c4(const Graph& g);
BigCount count_p4(const Graph& g);

/// p4 through the per-edge identity sum_e ((d-1)^2 - k(e)); G must be regular.
BigCount p4_via_edge_formula(const Graph& g);

/// For e = uv: A = N(u) \ N[v], B = N(u) ∩ N(v), C = N(v) \ N[u].
struct EdgeLocalStats {
  int k = 0;  // |B|
  int l = 0;  // edges A-B, B-C, C-A
  int m = 0;  // edges inside B
  VertexSet a = 0, b = 0, c = 0;
  friend bool operator==(const EdgeLocalStats&, const EdgeLocalStats&) = default;
};
EdgeLocalStats edge_local_stats(const Graph& g, Edge e);

/// H^bst on V(H) x V(H); vertex (u, v) has index u * side + v. Loops that the
/// construction produces on (u, v) (u, v looped and u, v non-adjacent) are
/// kept, and a loop makes the graph non-bipartite.
struct BstSquare {
  int side = 0;
  std::vector<std::vector<int>> adjacency;
  bool has_loop = false;
  bool bipartite = false;
};
BstSquare bst_square(const ConstraintGraph& h);

}  // namespace homcert
