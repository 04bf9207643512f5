#pragma once

#include "homcert/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace homcert {

// Named constraint graphs. All are returned normalized (no isolated vertices).
ConstraintGraph complete_loopless(int q);          // K_q
ConstraintGraph complete_looped(int k);            // every vertex looped, all edges
ConstraintGraph deleted_loops(int q, int l);       // H_q^l: loops removed at 0..l-1
ConstraintGraph widom_rowlinson_q(int q);          // H_q: complete looped minus edge {0,1}
ConstraintGraph hard_core(int k);                  // H(k): ij edge iff i + j <= k
ConstraintGraph looped_isolated(int k);            // E_k^o
ConstraintGraph looped_path(int k);                // P_k^o
ConstraintGraph independent_set_graph();           // H_ind = H(1)
ConstraintGraph widom_rowlinson();                 // H_WR = P_3^o

/// Parses names such as "K:3", "Kloop:2", "Hql:4:1", "Hq:4", "H:3", "E:2",
/// "P:3", "ind", "wr". Throws std::invalid_argument on unknown names or
/// parameters out of range.
ConstraintGraph catalog_constraint(std::string_view name);

/// Parses "K:n", "Kab:a:b", "Kdd:d", "C:n", "P:n" with an optional "t*"
/// multiplicity prefix, e.g. "2*Kdd:2".
Graph catalog_graph(std::string_view name);

struct NamedConstraint {
  std::string name;
  ConstraintGraph graph;
};

/// The named families with at most max_k vertices, one entry per isomorphism
/// class (first name wins), in a fixed order.
std::vector<NamedConstraint> constraint_catalog(int max_k);

/// Every constraint graph on 1..max_k vertices with no isolated vertex, one
/// per isomorphism class, named "M<k>:<row bits>".
std::vector<NamedConstraint> all_constraint_graphs(int max_k);

}  // namespace homcert
