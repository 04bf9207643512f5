#include "homcert/regular.hpp"

#include "homcert/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace homcert {

namespace {

Graph from_code(const CanonicalCode& code) {
  const int n = static_cast<int>(code[0]);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (VertexSet s = code[u + 1] & ~prefix_mask(u + 1); s != 0; s &= s - 1) g.add_edge(u, lowest(s));
  }
  return g;
}

// Connected d-regular graphs on n vertices, labelled in breadth-first order:
// vertices are completed in label order, and vertex i takes its missing
// edges from already discovered vertices j > i with spare degree plus some
// number of brand-new vertices, which receive the next free labels. Every
// connected graph has such a labelling, so deduplicating by canonical code
// gives each class once.
std::vector<Graph> connected_regular(int n, int d) {
  std::set<CanonicalCode> seen;
  std::vector<Graph> out;
  if (n == 1 && d == 0) return {Graph(1)};
  if (d == 0 || d >= n || (n * d) % 2 != 0) return out;

  Graph g(n);
  std::function<void(int, int)> complete = [&](int i, int next) {
    if (i == n) {
      if (next == n) {
        auto code = canonical_code(g);
        if (seen.insert(code).second) out.push_back(from_code(code));
      }
      return;
    }
    if (i >= next) return;  // vertex i never discovered: disconnected
    const int need = d - g.degree(i);
    if (need < 0) return;
    VertexSet open = 0;
    for (int j = i + 1; j < next; ++j) {
      if (g.degree(j) < d && !g.adjacent(i, j)) open |= bit(j);
    }
    // choose `old` of the open discovered vertices and need - old fresh ones
    for (int fresh = std::min(need, n - next); fresh >= 0; --fresh) {
      const int old = need - fresh;
      if (old > popcount(open)) continue;
      std::function<void(VertexSet, int)> pick = [&](VertexSet pool, int left) {
        if (left == 0) {
          for (int k = 0; k < fresh; ++k) g.add_edge(i, next + k);
          complete(i + 1, next + fresh);
          for (int k = 0; k < fresh; ++k) g.remove_edge(i, next + k);
          return;
        }
        for (VertexSet p = pool; popcount(p) >= left; p &= p - 1) {
          const int j = lowest(p);
          g.add_edge(i, j);
          pick(p & (p - 1), left - 1);
          g.remove_edge(i, j);
        }
      };
      pick(open, old);
    }
  };
  complete(0, 1);
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return canonical_code(a) < canonical_code(b); });
  return out;
}

// Results are reused across calls; generation at n = 12 takes seconds.
const std::vector<Graph>& connected_regular_cached(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, d});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), connected_regular(n, d)).first;
  return it->second;
}

}  // namespace

std::vector<Graph> enumerate_regular(int n, int d, bool connected) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw std::invalid_argument("enumerate_regular: n must be in [1, 12]; feed larger graphs as graph6");
  }
  if (d < 0) throw std::invalid_argument("enumerate_regular: negative degree");
  if ((n * d) % 2 != 0) {
    throw std::invalid_argument("enumerate_regular: n*d is odd, no " + std::to_string(d) +
                                "-regular graph on " + std::to_string(n) + " vertices");
  }
  if (d >= n) return {};
  if (connected) return connected_regular_cached(n, d);

  // Multisets of connected components, listed in nondecreasing (order, index).
  std::map<int, std::vector<Graph>> parts;
  for (int m = 1; m <= n; ++m) {
    if ((m * d) % 2 == 0 && d < m) parts[m] = connected_regular_cached(m, d);
  }
  std::vector<std::pair<int, int>> chosen;
  std::vector<Graph> out;
  std::function<void(int, int, int)> build = [&](int left, int min_order, int min_index) {
    if (left == 0) {
      Graph u(0);
      for (auto [m, idx] : chosen) u = disjoint_union(u, parts[m][idx]);
      out.push_back(canonical_form(u));
      return;
    }
    for (auto& [m, list] : parts) {
      if (m < min_order || m > left) continue;
      for (int idx = m == min_order ? min_index : 0; idx < static_cast<int>(list.size()); ++idx) {
        chosen.push_back({m, idx});
        build(left - m, m, idx);
        chosen.pop_back();
      }
    }
  };
  build(n, 1, 0);
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return canonical_code(a) < canonical_code(b); });
  return out;
}

}  // namespace homcert
