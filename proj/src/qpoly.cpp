#include "homcert/qpoly.hpp"

#include "homcert/canonical.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace homcert {

// ---------------------------------------------------------------- QPolynomial

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(const BigInt& c, unsigned power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

const BigInt& QPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt QPolynomial::operator()(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[p];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || p == 0) out += homcert::to_string(mag);
    if (p >= 1) out += "q";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

std::string QPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const BigInt& c : coeffs_) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(homcert::to_string(c));
    }
  }
  return nlohmann::json{{"coeffs", arr}}.dump();
}

QPolynomial QPolynomial::from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text.begin(), text.end());
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<BigInt> v;
  for (const auto& c : doc["coeffs"]) {
    if (c.is_number_integer()) {
      v.emplace_back(std::to_string(c.get<long long>()));
    } else if (c.is_string()) {
      v.emplace_back(c.get<std::string>());
    } else {
      throw std::invalid_argument("polynomial coefficient must be an integer or a decimal string");
    }
  }
  return QPolynomial(std::move(v));
}

// ---------------------------------------------------------------- deletion specs

int DeletionSpec::vertices() const {
  int total = 0;
  for (auto [r, s] : pairs) total += r + s;
  return total;
}

int DeletionSpec::deleted_edges() const {
  int total = 0;
  for (auto [r, s] : pairs) total += r * s;
  return total;
}

namespace {

void check_spec(const DeletionSpec& spec) {
  if (spec.pairs.empty()) {
    throw std::invalid_argument("deletion spec is empty; use the deleted-loops family for l = 0");
  }
  for (auto [r, s] : spec.pairs) {
    if (r < 1 || s < 1) throw std::invalid_argument("deletion spec block sizes must be positive");
  }
}

}  // namespace

ConstraintGraph bipartite_deletion_graph(int q, const DeletionSpec& spec) {
  check_spec(spec);
  if (spec.vertices() > q) throw std::invalid_argument("deletion spec needs more than q vertices");
  ConstraintGraph h(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u; v < q; ++v) h.add_edge(u, v);
  }
  ConstraintGraph out(q);
  int base = 0;
  std::vector<int> block(q, -1);
  std::vector<int> side(q, -1);
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    auto [r, s] = spec.pairs[i];
    for (int j = 0; j < r + s; ++j) {
      block[base + j] = static_cast<int>(i);
      side[base + j] = j < r ? 0 : 1;
    }
    base += r + s;
  }
  for (int u = 0; u < q; ++u) {
    for (int v = u; v < q; ++v) {
      const bool removed = block[u] >= 0 && block[u] == block[v] && side[u] != side[v];
      if (!removed) out.add_edge(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- edge-subset walks

namespace {

// Union-find over the vertices of G with undo, tracking for each root the
// sizes of the two colour classes. Used to walk all edge subsets S by
// include/exclude recursion while maintaining v(S), c(S) and bipartiteness.
class SubsetWalker {
 public:
  explicit SubsetWalker(const Graph& g) : edges_(g.edges()) {
    for (int v = 0; v < kMaxOrder; ++v) {
      parent_[v] = v;
      size_[v] = 1;
      cls_[v] = {1, 0};
    }
  }

  // visit(touched, components, edge_count, *this) at every leaf; when
  // `bipartite_only`, subtrees whose edge set contains an odd cycle are skipped.
  template <class Visit>
  void walk(bool bipartite_only, Visit&& visit) {
    recurse(0, bipartite_only, visit);
  }

  // Colour class sizes of every component touched so far.
  void class_sizes(std::vector<std::pair<int, int>>& out) const {
    out.clear();
    for (VertexSet t = touched_; t != 0; t &= t - 1) {
      const int v = lowest(t);
      if (parent_[v] == v) out.push_back({cls_[v][0], cls_[v][1]});
    }
  }

 private:
  struct Undo {
    int child = -1;  // root attached under another root, or -1
    VertexSet touched = 0;
    int components = 0;
  };

  std::pair<int, int> find(int v) const {
    int parity = 0;
    while (parent_[v] != v) {
      parity ^= parity_[v];
      v = parent_[v];
    }
    return {v, parity};
  }

  // Returns false when the edge closes an odd cycle (state unchanged then).
  bool add(int u, int v, bool bipartite_only, Undo& undo) {
    undo = {-1, touched_, components_};
    for (int w : {u, v}) {
      if (!(touched_ & bit(w))) {
        touched_ |= bit(w);
        ++components_;
      }
    }
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (pu == pv && bipartite_only) {
        touched_ = undo.touched;
        components_ = undo.components;
        return false;
      }
      return true;
    }
    if (size_[ru] < size_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    const int flip = pu ^ pv ^ 1;  // parity of rv relative to ru
    parent_[rv] = ru;
    parity_[rv] = flip;
    size_[ru] += size_[rv];
    cls_[ru][0] += cls_[rv][flip];
    cls_[ru][1] += cls_[rv][1 - flip];
    --components_;
    undo.child = rv;
    return true;
  }

  void remove(const Undo& undo) {
    if (undo.child >= 0) {
      const int rv = undo.child;
      const int ru = parent_[rv];
      const int flip = parity_[rv];
      size_[ru] -= size_[rv];
      cls_[ru][0] -= cls_[rv][flip];
      cls_[ru][1] -= cls_[rv][1 - flip];
      parent_[rv] = rv;
      parity_[rv] = 0;
    }
    touched_ = undo.touched;
    components_ = undo.components;
  }

  template <class Visit>
  void recurse(std::size_t i, bool bipartite_only, Visit& visit) {
    if (i == edges_.size()) {
      visit(touched_, components_, depth_, *this);
      return;
    }
    recurse(i + 1, bipartite_only, visit);
    Undo undo;
    if (add(edges_[i].u, edges_[i].v, bipartite_only, undo)) {
      ++depth_;
      recurse(i + 1, bipartite_only, visit);
      --depth_;
      remove(undo);
    }
  }

  std::vector<Edge> edges_;
  std::array<int, kMaxOrder> parent_{};
  std::array<int, kMaxOrder> parity_{};
  std::array<int, kMaxOrder> size_{};
  std::array<std::array<int, 2>, kMaxOrder> cls_{};
  VertexSet touched_ = 0;
  int components_ = 0;
  int depth_ = 0;
};

void check_subset_guard(const Graph& g, const Limits& limits) {
  if (static_cast<int>(g.edge_count()) > limits.subset_edges) {
    throw ResourceError("subset_edges", "edge-subset expansion needs |E(G)| <= " +
                                            std::to_string(limits.subset_edges) + ", got " +
                                            std::to_string(g.edge_count()));
  }
}

}  // namespace

QPolynomial qpoly_deleted_loops(const Graph& g, int loops_deleted, const Limits& limits) {
  if (loops_deleted < 0) throw std::invalid_argument("number of deleted loops must be nonnegative");
  check_subset_guard(g, limits);
  const int n = g.order();
  // signed[v][c]: sum of (-1)^|S| over S with v(S) = v and c(S) = c
  std::vector<std::vector<long long>> table(n + 1, std::vector<long long>(n + 1, 0));
  SubsetWalker walker(g);
  walker.walk(false, [&](VertexSet touched, int comps, int size, const SubsetWalker&) {
    table[popcount(touched)][comps] += size % 2 == 0 ? 1 : -1;
  });
  std::vector<BigInt> coeffs(n + 1);
  for (int v = 0; v <= n; ++v) {
    for (int c = 0; c <= n; ++c) {
      if (table[v][c] != 0) {
        coeffs[n - v] += BigInt(std::to_string(table[v][c])) * pow(static_cast<unsigned long>(loops_deleted), c);
      }
    }
  }
  return QPolynomial(std::move(coeffs));
}

QPolynomial qpoly_bipartite_deletion(const Graph& g, const DeletionSpec& spec, const Limits& limits) {
  check_spec(spec);
  check_subset_guard(g, limits);
  const int n = g.order();

  // Group leaves by v(S) and the multiset of component class sizes.
  std::unordered_map<std::string, long long> groups;
  std::vector<std::pair<int, int>> sizes;
  std::string key;
  SubsetWalker walker(g);
  walker.walk(true, [&](VertexSet touched, int, int size, const SubsetWalker& w) {
    w.class_sizes(sizes);
    for (auto& [a, b] : sizes) {
      if (a > b) std::swap(a, b);
    }
    std::sort(sizes.begin(), sizes.end());
    key.clear();
    key.push_back(static_cast<char>(popcount(touched)));
    for (auto [a, b] : sizes) {
      key.push_back(static_cast<char>(a));
      key.push_back(static_cast<char>(b));
    }
    groups[key] += size % 2 == 0 ? 1 : -1;
  });

  // hom of one bipartite component with classes (a, b) into the blocks.
  const auto component = [&](int a, int b) {
    BigInt f = 0;
    for (auto [r, s] : spec.pairs) {
      f += pow(static_cast<unsigned long>(r), a) * pow(static_cast<unsigned long>(s), b);
      f += pow(static_cast<unsigned long>(r), b) * pow(static_cast<unsigned long>(s), a);
    }
    return f;
  };

  std::vector<BigInt> coeffs(n + 1);
  for (const auto& [k, count] : groups) {
    if (count == 0) continue;
    BigInt term(std::to_string(count));
    for (std::size_t i = 1; i + 1 < k.size(); i += 2) term *= component(k[i], k[i + 1]);
    coeffs[n - k[0]] += term;
  }
  return QPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------- chromatic polynomial

namespace {

QPolynomial falling_poly(int n) {
  QPolynomial out({BigInt(1)});
  for (int i = 0; i < n; ++i) out = out * QPolynomial({BigInt(-i), BigInt(1)});
  return out;
}

Graph delete_vertex(const Graph& g, int v) { return g.induced(g.vertices() & ~bit(v)); }

Graph delete_edge(Graph g, int u, int v) {
  g.remove_edge(u, v);
  return g;
}

// Merges v into u and drops v's index.
Graph contract_edge(const Graph& g, int u, int v) {
  const auto index = [&](int w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  Graph out(g.order() - 1);
  for (const Edge& e : g.edges()) {
    const int a = index(e.u), b = index(e.v);
    if (a != b && !out.adjacent(a, b)) out.add_edge(a, b);
  }
  return out;
}

class Chromatic {
 public:
  QPolynomial operator()(const Graph& g) {
    const int n = g.order();
    if (g.edge_count() == 0) return QPolynomial::monomial(1, n);
    if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return falling_poly(n);

    const auto comps = g.components();
    if (comps.size() > 1) {
      QPolynomial out({BigInt(1)});
      for (VertexSet c : comps) out = out * (*this)(g.induced(c));
      return out;
    }
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 1) return QPolynomial({BigInt(-1), BigInt(1)}) * (*this)(delete_vertex(g, v));
    }

    const CanonicalCode code = canonical_code(g);
    const std::string key(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(code[0]));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int u = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) < g.degree(u)) u = v;
    }
    const int w = lowest(g.neighbors(u));
    QPolynomial out = (*this)(delete_edge(g, u, w)) - (*this)(contract_edge(g, u, w));
    if (memo_.size() > (1U << 18)) memo_.clear();
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::unordered_map<std::string, QPolynomial> memo_;
};

}  // namespace

QPolynomial chromatic_polynomial(const Graph& g, const Limits& limits) {
  if (g.order() > limits.chromatic_vertices) {
    throw ResourceError("chromatic_vertices", "deletion-contraction needs |V(G)| <= " +
                                                  std::to_string(limits.chromatic_vertices));
  }
  return Chromatic{}(g);
}

// ---------------------------------------------------------------- broken circuits

std::vector<BigInt> broken_circuit_coefficients(const Graph& g, const std::vector<int>& edge_order,
                                                const Limits& limits) {
  check_subset_guard(g, limits);
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> order = edge_order;
  if (order.empty()) {
    for (int i = 0; i < m; ++i) order.push_back(i);
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(sorted.size()) != m || sorted[i] != i) {
        throw std::invalid_argument("edge order is not a permutation of the edge indices");
      }
    }
  }
  std::vector<int> rank(m);
  for (int r = 0; r < m; ++r) rank[order[r]] = r;

  std::array<std::array<int, kMaxOrder>, kMaxOrder> id{};
  for (int i = 0; i < m; ++i) {
    id[edges[i].u][edges[i].v] = i;
    id[edges[i].v][edges[i].u] = i;
  }

  // Cycles through their smallest vertex s, each direction once.
  std::vector<std::uint32_t> cycles;
  std::vector<int> path;
  std::function<void(int, VertexSet, std::uint32_t)> extend = [&](int x, VertexSet used, std::uint32_t mask) {
    const int s = path.front();
    for (VertexSet nb = g.neighbors(x); nb != 0; nb &= nb - 1) {
      const int y = lowest(nb);
      if (y == s && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(mask | (1U << id[x][y]));
      } else if (y > s && !(used & bit(y))) {
        path.push_back(y);
        extend(y, used | bit(y), mask | (1U << id[x][y]));
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path = {s};
    extend(s, bit(s), 0);
  }

  // Broken circuits grouped by the rank of their largest remaining edge.
  std::vector<std::vector<std::uint32_t>> by_top(m);
  for (std::uint32_t c : cycles) {
    int top = -1;
    for (std::uint32_t t = c; t != 0; t &= t - 1) top = std::max(top, rank[std::countr_zero(t)]);
    const std::uint32_t bc = c & ~(1U << order[top]);
    int bc_top = -1;
    for (std::uint32_t t = bc; t != 0; t &= t - 1) bc_top = std::max(bc_top, rank[std::countr_zero(t)]);
    by_top[bc_top].push_back(bc);
  }

  std::vector<unsigned long long> counts(m + 1, 0);
  std::function<void(int, std::uint32_t, int)> choose = [&](int r, std::uint32_t set, int size) {
    if (r == m) {
      ++counts[size];
      return;
    }
    choose(r + 1, set, size);
    const std::uint32_t with = set | (1U << order[r]);
    for (std::uint32_t bc : by_top[r]) {
      if ((bc & ~with) == 0) return;
    }
    choose(r + 1, with, size + 1);
  };
  choose(0, 0, 0);

  // A broken-circuit-free set is a forest, so sizes stop at n - c(G); the
  // remaining entries are zero.
  std::vector<BigInt> out(std::max(g.order(), 1));
  for (int i = 0; i <= m && i < static_cast<int>(out.size()); ++i) out[i] = std::to_string(counts[i]);
  return out;
}

// ---------------------------------------------------------------- families and thresholds

Family Family::parse(std::string_view text) {
  if (text == "chromatic") return chromatic();
  const auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad number '" + std::string(s) + "' in family name");
    }
    return v;
  };
  if (text.starts_with("loops:")) return deleted_loops(number(text.substr(6)));
  if (text.starts_with("bip:")) {
    DeletionSpec spec;
    std::string_view rest = text.substr(4);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto x = item.find('x');
      if (x == std::string_view::npos) throw std::invalid_argument("deletion block must look like RxS");
      spec.pairs.push_back({number(item.substr(0, x)), number(item.substr(x + 1))});
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    check_spec(spec);
    return bipartite_deletion(std::move(spec));
  }
  throw std::invalid_argument("unknown family '" + std::string(text) +
                              "' (expected chromatic, loops:<l> or bip:<r>x<s>,...)");
}

std::string Family::name() const {
  switch (kind) {
    case Kind::Chromatic: return "chromatic";
    case Kind::DeletedLoops: return "loops:" + std::to_string(loops_deleted);
    case Kind::BipartiteDeletion: {
      std::string out = "bip:";
      for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(spec.pairs[i].first) + "x" + std::to_string(spec.pairs[i].second);
      }
      return out;
    }
  }
  return "?";
}

QPolynomial family_polynomial(const Graph& g, const Family& f, const Limits& limits) {
  switch (f.kind) {
    case Family::Kind::Chromatic: return chromatic_polynomial(g, limits);
    case Family::Kind::DeletedLoops: return qpoly_deleted_loops(g, f.loops_deleted, limits);
    case Family::Kind::BipartiteDeletion: return qpoly_bipartite_deletion(g, f.spec, limits);
  }
  throw std::logic_error("unknown family kind");
}

const char* to_string(Threshold::Kind k) {
  switch (k) {
    case Threshold::Kind::Finite: return "finite";
    case Threshold::Kind::Never: return "never";
    case Threshold::Kind::Tie: return "tie";
  }
  return "?";
}

namespace {

// Smallest integer t >= 0 with t^i >= x, for x >= 0.
BigInt ceil_root(const BigInt& x, unsigned long i) {
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), i);
  if (pow(r, i) < x) ++r;
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// No real root of p exceeds the returned integer (the smaller of the Cauchy
// and Fujiwara bounds, rounded up).
BigInt real_root_bound(const QPolynomial& p) {
  const int n = p.degree();
  const BigInt lead = abs(p.leading());
  BigInt cauchy = 0;
  BigInt fujiwara = 0;
  for (int i = 1; i <= n; ++i) {
    const BigInt c = abs(p.coeff(static_cast<unsigned>(n - i)));
    cauchy = std::max(cauchy, ceil_div(c, lead));
    fujiwara = std::max(fujiwara, BigInt(2 * ceil_root(ceil_div(c, lead), static_cast<unsigned long>(i))));
  }
  cauchy += 1;
  return std::max(BigInt(1), std::min(cauchy, fujiwara));
}

}  // namespace

Threshold threshold_q(const QPolynomial& reference, const QPolynomial& candidate, const Limits& limits) {
  Threshold t;
  t.difference = reference - candidate;
  if (t.difference.is_zero()) {
    t.kind = Threshold::Kind::Tie;
    return t;
  }
  t.root_bound = real_root_bound(t.difference);
  if (t.difference.leading() < 0) {
    t.kind = Threshold::Kind::Never;
    return t;
  }
  if (t.root_bound > BigInt(std::to_string(limits.state_budget))) {
    throw ResourceError("state_budget", "threshold scan would need " + to_string(t.root_bound) + " evaluations");
  }
  t.kind = Threshold::Kind::Finite;
  unsigned long q = t.root_bound.get_ui();
  while (q >= 1 && t.difference(BigInt(q)) > 0) --q;
  t.q0 = q + 1;
  return t;
}

Threshold threshold_q(const Graph& reference, const Graph& candidate, const Family& f, const Limits& limits) {
  if (reference.order() != candidate.order()) {
    throw std::invalid_argument("threshold_q: reference and candidate have different orders");
  }
  return threshold_q(family_polynomial(reference, f, limits), family_polynomial(candidate, f, limits), limits);
}

}  // namespace homcert
