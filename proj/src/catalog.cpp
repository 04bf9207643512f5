#include "homcert/catalog.hpp"

#include "homcert/canonical.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace homcert {

namespace {

void require(bool ok, std::string_view what) {
  if (!ok) throw std::invalid_argument(std::string(what));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto at = text.find(sep);
    parts.push_back(text.substr(0, at));
    if (at == std::string_view::npos) break;
    text.remove_prefix(at + 1);
  }
  return parts;
}

int parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("catalog: bad integer parameter '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

ConstraintGraph complete_loopless(int q) {
  require(q >= 2 && q <= kMaxOrder, "K_q needs 2 <= q <= 32");
  ConstraintGraph h(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) h.add_edge(u, v);
  }
  return h;
}

ConstraintGraph complete_looped(int k) {
  require(k >= 1 && k <= kMaxOrder, "complete looped graph needs 1 <= k <= 32");
  ConstraintGraph h(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u; v < k; ++v) h.add_edge(u, v);
  }
  return h;
}

ConstraintGraph deleted_loops(int q, int l) {
  require(q >= 1 && q <= kMaxOrder, "H_q^l needs 1 <= q <= 32");
  require(l >= 0 && l <= q, "H_q^l needs 0 <= l <= q");
  require(!(q == 1 && l == 1), "H_1^1 is a single isolated vertex");
  ConstraintGraph h(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u; v < q; ++v) {
      if (u != v || u >= l) h.add_edge(u, v);
    }
  }
  return h;
}

ConstraintGraph widom_rowlinson_q(int q) {
  require(q >= 2 && q <= kMaxOrder, "H_q needs 2 <= q <= 32");
  ConstraintGraph h(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u; v < q; ++v) {
      if (!(u == 0 && v == 1)) h.add_edge(u, v);
    }
  }
  return h;
}

ConstraintGraph hard_core(int k) {
  require(k >= 1 && k + 1 <= kMaxOrder, "H(k) needs 1 <= k <= 31");
  ConstraintGraph h(k + 1);
  for (int i = 0; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      if (i + j <= k) h.add_edge(i, j);
    }
  }
  return h;
}

ConstraintGraph looped_isolated(int k) {
  require(k >= 1 && k <= kMaxOrder, "E_k^o needs 1 <= k <= 32");
  ConstraintGraph h(k);
  for (int v = 0; v < k; ++v) h.add_edge(v, v);
  return h;
}

ConstraintGraph looped_path(int k) {
  require(k >= 1 && k <= kMaxOrder, "P_k^o needs 1 <= k <= 32");
  ConstraintGraph h(k);
  for (int v = 0; v < k; ++v) {
    h.add_edge(v, v);
    if (v + 1 < k) h.add_edge(v, v + 1);
  }
  return h;
}

ConstraintGraph independent_set_graph() { return hard_core(1); }

ConstraintGraph widom_rowlinson() { return looped_path(3); }

ConstraintGraph catalog_constraint(std::string_view name) {
  const auto parts = split(name, ':');
  const auto& head = parts[0];
  auto arg = [&](std::size_t i) {
    require(parts.size() > i, "catalog: missing parameter for '" + std::string(name) + "'");
    return parse_int(parts[i]);
  };
  auto arity = [&](std::size_t n) {
    require(parts.size() == n + 1, "catalog: wrong parameter count for '" + std::string(name) + "'");
  };
  if (head == "ind" || head == "wr") {
    arity(0);
    return head == "ind" ? independent_set_graph() : widom_rowlinson();
  }
  if (head == "Hql") {
    arity(2);
    return deleted_loops(arg(1), arg(2));
  }
  if (head.size() >= 2 && head[0] == 'M') {
    // "M<k>:<row>/<row>/..." as produced by all_constraint_graphs.
    arity(1);
    const int k = parse_int(head.substr(1));
    const auto rows = split(parts[1], '/');
    require(k >= 1 && k <= kMaxOrder && static_cast<int>(rows.size()) == k,
            "catalog: bad matrix name '" + std::string(name) + "'");
    std::string text = std::to_string(k) + "\n";
    for (const auto& row : rows) text += std::string(row) + "\n";
    return parse_constraint(text).graph;
  }
  static const std::set<std::string_view> kUnary = {"K", "Kloop", "Hq", "H", "E", "P"};
  if (!kUnary.contains(head)) {
    throw std::invalid_argument("catalog: unknown constraint graph '" + std::string(name) + "'");
  }
  arity(1);
  if (head == "K") return complete_loopless(arg(1));
  if (head == "Kloop") return complete_looped(arg(1));
  if (head == "Hq") return widom_rowlinson_q(arg(1));
  if (head == "H") return hard_core(arg(1));
  if (head == "E") return looped_isolated(arg(1));
  if (head == "P") return looped_path(arg(1));
  throw std::invalid_argument("catalog: unknown constraint graph '" + std::string(name) + "'");
}

Graph catalog_graph(std::string_view name) {
  int times = 1;
  if (const auto star = name.find('*'); star != std::string_view::npos) {
    times = parse_int(name.substr(0, star));
    require(times >= 1, "catalog: multiplicity must be positive");
    name.remove_prefix(star + 1);
  }
  const auto parts = split(name, ':');
  auto arg = [&](std::size_t i) {
    require(parts.size() > i, "catalog: missing parameter for '" + std::string(name) + "'");
    const int v = parse_int(parts[i]);
    require(v >= 0 && v <= kMaxOrder, "catalog: parameter out of range");
    return v;
  };
  const auto& head = parts[0];
  Graph g;
  if (head == "K" && parts.size() == 2) {
    g = complete_graph(arg(1));
  } else if (head == "Kab" && parts.size() == 3) {
    g = complete_bipartite(arg(1), arg(2));
  } else if (head == "Kdd" && parts.size() == 2) {
    g = complete_bipartite(arg(1), arg(1));
  } else if (head == "C" && parts.size() == 2) {
    g = cycle_graph(arg(1));
  } else if (head == "P" && parts.size() == 2) {
    g = path_graph(arg(1));
  } else {
    throw std::invalid_argument("catalog: unknown graph '" + std::string(name) + "'");
  }
  require(g.order() * times <= kMaxOrder, "catalog: graph exceeds 32 vertices");
  return copies(g, times);
}

std::vector<NamedConstraint> constraint_catalog(int max_k) {
  std::vector<NamedConstraint> raw;
  auto add = [&](std::string name, ConstraintGraph h) {
    if (h.order() <= max_k) raw.push_back({std::move(name), std::move(h)});
  };
  for (int q = 2; q <= max_k; ++q) add("K:" + std::to_string(q), complete_loopless(q));
  for (int k = 1; k <= max_k; ++k) add("Kloop:" + std::to_string(k), complete_looped(k));
  for (int q = 2; q <= max_k; ++q) {
    for (int l = 1; l < q; ++l) {
      add("Hql:" + std::to_string(q) + ":" + std::to_string(l), deleted_loops(q, l));
    }
  }
  for (int k = 1; k + 1 <= max_k; ++k) add("H:" + std::to_string(k), hard_core(k));
  for (int k = 2; k <= max_k; ++k) add("E:" + std::to_string(k), looped_isolated(k));
  for (int k = 3; k <= max_k; ++k) add("P:" + std::to_string(k), looped_path(k));
  for (int q = 3; q <= max_k; ++q) add("Hq:" + std::to_string(q), widom_rowlinson_q(q));

  std::vector<NamedConstraint> out;
  std::set<CanonicalCode> seen;
  for (auto& entry : raw) {
    if (seen.insert(canonical_code(entry.graph)).second) out.push_back(std::move(entry));
  }
  return out;
}

std::vector<NamedConstraint> all_constraint_graphs(int max_k) {
  require(max_k >= 1 && max_k <= 6, "all_constraint_graphs supports 1 <= k <= 6");
  std::vector<NamedConstraint> out;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) slots.emplace_back(i, j);
    }
    std::set<CanonicalCode> seen;
    std::vector<NamedConstraint> level;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      ConstraintGraph h(k);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1U) h.add_edge(slots[s].first, slots[s].second);
      }
      if (h.has_isolated_vertex()) continue;
      auto code = canonical_code(h);
      if (!seen.insert(code).second) continue;
      ConstraintGraph canon = canonical_form(h);
      std::string name = "M" + std::to_string(k) + ":";
      for (int i = 0; i < k; ++i) {
        if (i > 0) name.push_back('/');
        for (int j = 0; j < k; ++j) name.push_back(canon.adjacent(i, j) ? '1' : '0');
      }
      level.push_back({std::move(name), std::move(canon)});
    }
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace homcert
