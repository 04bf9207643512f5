#include "homcert/graph.hpp"

#include "homcert/errors.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace homcert {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0, 32]");
  }
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int order) : order_(order) { check_order(order); }

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("source graphs are loopless");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (VertexSet rest = rows_[u] & ~prefix_mask(u + 1); rest != 0; rest &= rest - 1) {
      out.push_back({u, lowest(rest)});
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

std::optional<int> Graph::regular_degree() const {
  if (order_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < order_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (unseen != 0) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= rows_[lowest(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool Graph::connected() const { return order_ == 0 || components().size() == 1; }

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (VertexSet s = keep; s != 0; s &= s - 1) index[lowest(s)] = next++;
  Graph out(next);
  for (VertexSet s = keep; s != 0; s &= s - 1) {
    const int u = lowest(s);
    for (VertexSet t = rows_[u] & keep; t != 0; t &= t - 1) {
      out.rows_[index[u]] |= bit(index[lowest(t)]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- ConstraintGraph

ConstraintGraph::ConstraintGraph(int order) : order_(order) { check_order(order); }

void ConstraintGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

VertexSet ConstraintGraph::looped() const {
  VertexSet out = 0;
  for (int v = 0; v < order_; ++v) {
    if (has_loop(v)) out |= bit(v);
  }
  return out;
}

bool ConstraintGraph::is_complete_looped() const {
  if (order_ == 0) return false;
  for (int v = 0; v < order_; ++v) {
    if (rows_[v] != vertices()) return false;
  }
  return true;
}

VertexSet ConstraintGraph::isolated() const {
  VertexSet out = 0;
  for (int v = 0; v < order_; ++v) {
    if (rows_[v] == 0) out |= bit(v);
  }
  return out;
}

bool ConstraintGraph::has_isolated_vertex() const { return isolated() != 0; }

ConstraintGraph ConstraintGraph::complement() const {
  ConstraintGraph out(order_);
  for (int v = 0; v < order_; ++v) out.rows_[v] = ~rows_[v] & vertices();
  return out;
}

ConstraintGraph ConstraintGraph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (VertexSet s = keep; s != 0; s &= s - 1) index[lowest(s)] = next++;
  ConstraintGraph out(next);
  for (VertexSet s = keep; s != 0; s &= s - 1) {
    const int u = lowest(s);
    for (VertexSet t = rows_[u] & keep; t != 0; t &= t - 1) {
      out.rows_[index[u]] |= bit(index[lowest(t)]);
    }
  }
  return out;
}

ConstraintGraph::Normalized ConstraintGraph::normalized() const {
  const VertexSet drop = isolated();
  return {induced(vertices() & ~drop), popcount(drop)};
}

// ---------------------------------------------------------------- builders

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
  return g;
}

Graph copies(const Graph& g, int times) {
  if (times < 0) throw std::invalid_argument("negative copy count");
  Graph out(0);
  for (int i = 0; i < times; ++i) out = disjoint_union(out, g);
  return out;
}

// ---------------------------------------------------------------- graph6

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(">>graph6<<")) base = 10;
  std::string_view body = text.substr(base);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  if (body.empty()) throw ParseError("graph6: empty input", base);

  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
  }

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(body[0]) != 126) {
    n = body[0] - 63;
    pos = 1;
  } else if (body.size() >= 4 && static_cast<unsigned char>(body[1]) != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (body[i] - 63);
    pos = 4;
  } else if (body.size() >= 8) {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | (body[i] - 63);
    pos = 8;
  } else {
    throw ParseError("graph6: truncated vertex count", base + body.size());
  }
  if (n > kMaxOrder) throw ParseError("graph6: more than 32 vertices", base);

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() < pos + bytes) {
    throw ParseError("graph6: truncated edge data", base + body.size());
  }
  if (body.size() > pos + bytes) {
    throw ParseError("graph6: trailing bytes after edge data", base + pos + bytes);
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = body[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = body[pos + bytes - 1] - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", base + pos + bytes - 1);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

// ---------------------------------------------------------------- constraint text

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

ParsedConstraint parse_constraint(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("constraint: missing vertex count", 1);

  int k = 0;
  for (char c : lines[0]) {
    if (c < '0' || c > '9') throw ParseError("constraint: vertex count is not a number", 1);
    k = k * 10 + (c - '0');
    if (k > kMaxOrder) throw ParseError("constraint: more than 32 vertices", 1);
  }
  if (lines[0].empty() || k == 0) throw ParseError("constraint: vertex count must be positive", 1);
  if (static_cast<int>(lines.size()) != k + 1) {
    throw ParseError("constraint: expected " + std::to_string(k) + " matrix rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.size());
  }

  ConstraintGraph h(k);
  for (int i = 0; i < k; ++i) {
    const auto row = lines[i + 1];
    if (static_cast<int>(row.size()) != k) {
      throw ParseError("constraint: row " + std::to_string(i) + " has " +
                           std::to_string(row.size()) + " entries, expected " + std::to_string(k),
                       i + 2);
    }
    for (int j = 0; j < k; ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw ParseError("constraint: entry is not 0 or 1", i + 2);
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      if (lines[i + 1][j] != lines[j + 1][i]) {
        throw ParseError("constraint: matrix is not symmetric at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         i + 2);
      }
      if (lines[i + 1][j] == '1') h.add_edge(i, j);
    }
  }

  auto [graph, stripped] = h.normalized();
  if (graph.order() == 0) throw ParseError("constraint: graph is empty after removing isolated vertices", 1);
  return {graph, stripped};
}

std::string to_constraint_text(const ConstraintGraph& h) {
  std::string out = std::to_string(h.order()) + "\n";
  for (int i = 0; i < h.order(); ++i) {
    for (int j = 0; j < h.order(); ++j) out.push_back(h.adjacent(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------- subgraph counts

BigCount count_c3(const Graph& g) {
  unsigned long total = 0;
  for (const Edge& e : g.edges()) total += popcount(g.neighbors(e.u) & g.neighbors(e.v));
  return BigCount(total / 3);
}

BigCount count_c4(const Graph& g) {
  // Each 4-cycle has two diagonals; each diagonal pair {u, w} sees it through
  // a pair of common neighbours.
  unsigned long twice = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int w = u + 1; w < g.order(); ++w) {
      const unsigned long c = popcount(g.neighbors(u) & g.neighbors(w));
      twice += c * (c - 1) / 2;
    }
  }
  return BigCount(twice / 2);
}

BigCount count_p4(const Graph& g) {
  // Paths x-u-v-y with middle edge uv: (deg u - 1)(deg v - 1) minus the
  // choices with x = y, i.e. the common neighbours of u and v.
  long total = 0;
  for (const Edge& e : g.edges()) {
    total += static_cast<long>(g.degree(e.u) - 1) * (g.degree(e.v) - 1);
    total -= popcount(g.neighbors(e.u) & g.neighbors(e.v));
  }
  return BigCount(total);
}

BigCount p4_via_edge_formula(const Graph& g) {
  const auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("p4_via_edge_formula: graph is not regular");
  long total = 0;
  for (const Edge& e : g.edges()) {
    total += static_cast<long>(*d - 1) * (*d - 1) - edge_local_stats(g, e).k;
  }
  return BigCount(total);
}

EdgeLocalStats edge_local_stats(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("edge_local_stats: not an edge");
  }
  EdgeLocalStats s;
  const VertexSet nu = g.neighbors(e.u) & ~bit(e.v);
  const VertexSet nv = g.neighbors(e.v) & ~bit(e.u);
  s.b = nu & nv;
  s.a = nu & ~nv;
  s.c = nv & ~nu;
  s.k = popcount(s.b);
  for (VertexSet x = s.a; x != 0; x &= x - 1) s.l += popcount(g.neighbors(lowest(x)) & s.b);
  for (VertexSet x = s.b; x != 0; x &= x - 1) s.l += popcount(g.neighbors(lowest(x)) & s.c);
  for (VertexSet x = s.c; x != 0; x &= x - 1) s.l += popcount(g.neighbors(lowest(x)) & s.a);
  int twice = 0;
  for (VertexSet x = s.b; x != 0; x &= x - 1) twice += popcount(g.neighbors(lowest(x)) & s.b);
  s.m = twice / 2;
  return s;
}

// ---------------------------------------------------------------- H^bst

BstSquare bst_square(const ConstraintGraph& h) {
  const int k = h.order();
  if (k > 16) throw ResourceError("image_vertices", "bst_square supports at most 16 vertices");
  BstSquare out;
  out.side = k;
  out.adjacency.assign(static_cast<std::size_t>(k * k), {});
  for (int p = 0; p < k * k; ++p) {
    const int u = p / k, v = p % k;
    for (int r = p; r < k * k; ++r) {
      const int u2 = r / k, v2 = r % k;
      if (h.adjacent(u, u2) && h.adjacent(v, v2) && (!h.adjacent(u, v2) || !h.adjacent(u2, v))) {
        out.adjacency[p].push_back(r);
        if (r != p) {
          out.adjacency[r].push_back(p);
        } else {
          out.has_loop = true;
        }
      }
    }
  }
  for (auto& list : out.adjacency) std::sort(list.begin(), list.end());

  if (out.has_loop) {
    out.bipartite = false;
    return out;
  }
  std::vector<int> side(out.adjacency.size(), -1);
  out.bipartite = true;
  for (std::size_t s = 0; s < side.size() && out.bipartite; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(static_cast<int>(s));
    while (!queue.empty() && out.bipartite) {
      const int x = queue.front();
      queue.pop();
      for (int y : out.adjacency[x]) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push(y);
        } else if (side[y] == side[x]) {
          out.bipartite = false;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace homcert
