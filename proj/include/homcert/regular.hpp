#pragma once

#include "homcert/graph.hpp"

#include <vector>

namespace homcert {

inline constexpr int kMaxGeneratedOrder = 12;

/// One representative (in canonical form) of every isomorphism class of
/// d-regular graphs on n vertices, sorted by canonical code. Requires
/// 1 <= n <= 12 and n*d even; d >= n yields nothing.
std::vector<Graph> enumerate_regular(int n, int d, bool connected);

}  // namespace homcert
