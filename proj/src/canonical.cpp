#include "homcert/canonical.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace homcert {

namespace {

// Individualization-refinement search for the lexicographically smallest
// relabelled adjacency matrix. Cells are refined to an equitable partition;
// the first non-singleton cell is the branching target. Every choice made is
// isomorphism-invariant, so the minimum over the leaves is canonical.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, std::span<const VertexSet> rows) : n_(n), rows_(rows.begin(), rows.end()) {}

  std::vector<int> run(std::vector<std::vector<int>> cells) {
    refine(cells);
    search(cells);
    return best_perm_;
  }

  const std::vector<VertexSet>& best_rows() const { return best_; }

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
        VertexSet splitter = 0;
        for (int v : cells[w]) splitter |= bit(v);
        for (std::size_t x = 0; x < cells.size() && !changed; ++x) {
          if (cells[x].size() == 1) continue;
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cells[x].size());
          for (int v : cells[x]) keyed.emplace_back(popcount(rows_[v] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          std::vector<std::vector<int>> parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
          changed = true;
        }
      }
    }
  }

  void search(const std::vector<std::vector<int>>& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = target - cells.begin();
    for (int v : *target) {
      auto next = cells;
      std::vector<int> rest;
      for (int u : *target) {
        if (u != v) rest.push_back(u);
      }
      next[index] = {v};
      next.insert(next.begin() + index + 1, rest);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> perm(n_);  // perm[new label] = old vertex
    std::array<int, kMaxOrder> label{};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      perm[i] = cells[i][0];
      label[cells[i][0]] = static_cast<int>(i);
    }
    std::vector<VertexSet> rows(n_);
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      for (VertexSet s = rows_[perm[i]]; s != 0; s &= s - 1) r |= bit(label[lowest(s)]);
      rows[i] = r;
    }
    if (best_perm_.empty() || rows < best_) {
      best_ = std::move(rows);
      best_perm_ = std::move(perm);
    }
  }

  int n_;
  std::vector<VertexSet> rows_;
  std::vector<VertexSet> best_;
  std::vector<int> best_perm_;
};

template <class G>
std::vector<VertexSet> rows_of(const G& g) {
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
  return rows;
}

std::vector<VertexSet> canonical_rows(int n, const std::vector<VertexSet>& rows,
                                      std::vector<std::vector<int>> initial) {
  if (n == 0) return {};
  CanonicalSearch search(n, rows);
  search.run(std::move(initial));
  return search.best_rows();
}

std::vector<VertexSet> canonical_rows(const Graph& g) {
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return canonical_rows(g.order(), rows_of(g), {all});
}

std::vector<VertexSet> canonical_rows(const ConstraintGraph& h) {
  std::vector<int> plain, loops;
  for (int v = 0; v < h.order(); ++v) (h.has_loop(v) ? loops : plain).push_back(v);
  std::vector<std::vector<int>> initial;
  if (!plain.empty()) initial.push_back(plain);
  if (!loops.empty()) initial.push_back(loops);
  return canonical_rows(h.order(), rows_of(h), initial);
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  CanonicalCode code{static_cast<std::uint32_t>(g.order())};
  for (VertexSet r : canonical_rows(g)) code.push_back(r);
  return code;
}

CanonicalCode canonical_code(const ConstraintGraph& h) {
  // Tag so that a loopless constraint graph never collides with a Graph code.
  CanonicalCode code{static_cast<std::uint32_t>(h.order()) | 0x100U};
  for (VertexSet r : canonical_rows(h)) code.push_back(r);
  return code;
}

Graph canonical_form(const Graph& g) {
  const auto rows = canonical_rows(g);
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (VertexSet s = rows[u] & ~prefix_mask(u + 1); s != 0; s &= s - 1) out.add_edge(u, lowest(s));
  }
  return out;
}

ConstraintGraph canonical_form(const ConstraintGraph& h) {
  const auto rows = canonical_rows(h);
  ConstraintGraph out(h.order());
  for (int u = 0; u < h.order(); ++u) {
    for (VertexSet s = rows[u] & ~prefix_mask(u); s != 0; s &= s - 1) out.add_edge(u, lowest(s));
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

bool isomorphic(const ConstraintGraph& a, const ConstraintGraph& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace homcert
