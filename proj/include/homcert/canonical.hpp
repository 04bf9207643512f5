#pragma once

#include "homcert/graph.hpp"

#include <cstdint>
#include <vector>

namespace homcert {

/// Order followed by the adjacency rows of the canonical relabelling.
/// Two graphs are isomorphic iff their codes are equal.
using CanonicalCode = std::vector<std::uint32_t>;

CanonicalCode canonical_code(const Graph& g);
CanonicalCode canonical_code(const ConstraintGraph& h);

Graph canonical_form(const Graph& g);
ConstraintGraph canonical_form(const ConstraintGraph& h);

bool isomorphic(const Graph& a, const Graph& b);
bool isomorphic(const ConstraintGraph& a, const ConstraintGraph& b);

}  // namespace homcert
