#include "homcert/bounds.hpp"
#include "homcert/catalog.hpp"
#include "homcert/closed_forms.hpp"
#include "homcert/hom.hpp"
#include "homcert/qpoly.hpp"
#include "homcert/regular.hpp"
#include "homcert/structure.hpp"
#include "homcert/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace homcert;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  bool seed_set = false;
  int workers = 0;
  std::uint64_t guard_limit = 0;

  Limits limits() const {
    return guard_limit > 0 ? Limits::defaults().with_guard_limit(guard_limit) : Limits::defaults();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holding graph6, a catalog name such as "Kdd:3" or "2*K:4", or a
// literal graph6 string, tried in that order.
Graph resolve_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::istringstream lines(slurp(arg));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return parse_graph6(line);
    }
    throw std::runtime_error(arg + ": no graph6 line");
  }
  if (arg.find(':') != std::string::npos) return catalog_graph(arg);
  return parse_graph6(arg);
}

// A constraint matrix file or a catalog name.
ConstraintGraph resolve_constraint(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_constraint(slurp(arg)).graph;
  return catalog_constraint(arg);
}

std::string str(const BigInt& x) { return to_string(x); }

json profile_json(const StructuralProfile& p) {
  json j{{"eta", p.eta}, {"m", p.m}, {"a", p.a}, {"b", p.b}, {"n", p.n}};
  if (p.primed) {
    const auto& q = *p.primed;
    std::vector<int> a0;
    for (VertexSet s = q.a0; s != 0; s &= s - 1) a0.push_back(lowest(s));
    j["A0"] = a0;
    j["eta_p"] = q.eta;
    j["m_p"] = q.m;
    j["a_p"] = q.a;
    j["b_p"] = q.b;
    j["n_p"] = q.n;
  }
  return j;
}

int cmd_count(const Globals& g, const std::string& g_arg, const std::string& h_arg) {
  const Graph graph = resolve_graph(g_arg);
  const ConstraintGraph h = resolve_constraint(h_arg);
  const Limits limits = g.limits();
  json out{{"graph6", to_graph6(graph)}, {"k", h.order()}};
  std::optional<BigCount> agreed;
  bool disagree = false;
  const auto run = [&](const char* name, auto&& engine) {
    try {
      const BigCount v = engine(graph, h, limits);
      out[name] = str(v);
      if (agreed && *agreed != v) disagree = true;
      agreed = v;
    } catch (const ResourceError& e) {
      out[name] = json{{"skipped", e.guard()}};
    }
  };
  run("bruteforce", [](auto& a, auto& b, auto& l) { return hom_bruteforce(a, b, l); });
  run("dp", [](auto& a, auto& b, auto& l) { return hom_dp(a, b, l); });
  run("inclusion_exclusion", [](auto& a, auto& b, auto& l) { return hom_inclusion_exclusion(a, b, l); });
  out["agree"] = !disagree;
  if (g.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (const char* name : {"bruteforce", "dp", "inclusion_exclusion"}) {
      const auto& v = out[name];
      std::cout << name << ": " << (v.is_string() ? v.get<std::string>() : "skipped (" + v["skipped"].get<std::string>() + ")")
                << '\n';
    }
  }
  if (disagree) {
    std::cerr << "error: counters disagree\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const Globals& g, const std::string& h_arg, unsigned d_max) {
  const ConstraintGraph h = resolve_constraint(h_arg);
  const Limits limits = g.limits();
  const auto profile = structural_profile(h, limits);
  const auto report = empirical_type(h, d_max, limits);
  const auto& v = report.verdict;
  if (g.json) {
    json table = json::array();
    for (const auto& row : report.table) {
      table.push_back({{"d", row.d}, {"hom_kdd", str(row.kdd)}, {"hom_kdp1", str(row.kdp1)}, {"sign", to_string(row.sign)}});
    }
    json out{{"profile", profile_json(profile)},
             {"type", to_string(v.kind)},
             {"condition", v.condition.index},
             {"reason", v.reason},
             {"stable_sign", to_string(report.stable_sign)},
             {"stable_from", report.stable_from},
             {"agrees", report.agrees},
             {"table", table}};
    if (v.crossover_d) out["crossover_d"] = *v.crossover_d;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << to_string(v.kind) << ", condition " << v.condition.index << " (" << v.reason << ")";
    if (v.crossover_d) std::cout << ", crossover d=" << *v.crossover_d;
    std::cout << '\n' << "profile: " << profile_json(profile).dump() << '\n';
    for (const auto& row : report.table) {
      std::cout << "d=" << row.d << "  hom(Kdd)=" << row.kdd << "  hom(Kd+1)=" << row.kdp1 << "  "
                << to_string(row.sign) << '\n';
    }
  }
  return report.agrees ? 0 : kExitViolation;
}

int cmd_closed(const Globals& g, const std::string& h_arg, unsigned d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const ConstraintGraph h = resolve_constraint(h_arg);
  const auto images = enumerate_images(h, g.limits());
  const BigCount kdd = hom_kdd_closed(images, d);
  const auto kdp1 = hom_kdp1_closed(h, images, d);
  const auto verdict = compare_cross_powers(d, kdd, kdp1.exact);
  if (g.json) {
    std::cout << json{{"d", d},
                      {"hom_kdd", str(kdd)},
                      {"hom_kdp1_display", str(kdp1.value)},
                      {"hom_kdp1_valid", kdp1.valid},
                      {"largest_unlooped_clique", kdp1.largest_unlooped_clique},
                      {"hom_kdp1", str(kdp1.exact)},
                      {"sign", to_string(verdict.sign)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "hom(K_{d,d},H) = " << kdd << '\n'
              << "hom(K_{d+1},H) = " << kdp1.exact << " (complete-image sum " << kdp1.value
              << (kdp1.valid ? ", exact" : ", misses unlooped cliques") << ")\n"
              << "cross powers: " << to_string(verdict.sign) << '\n';
  }
  return 0;
}

int cmd_qpoly(const Globals& g, const std::string& g_arg, const std::string& family_arg,
              const std::string& reference_arg) {
  const Graph graph = resolve_graph(g_arg);
  const Family family = Family::parse(family_arg);
  const Limits limits = g.limits();
  const QPolynomial poly = family_polynomial(graph, family, limits);
  json out{{"family", family.name()}, {"polynomial", json::parse(poly.to_json())}};
  std::optional<Threshold> t;
  if (!reference_arg.empty()) {
    const Graph ref = resolve_graph(reference_arg);
    if (ref.order() != graph.order()) throw std::invalid_argument("reference and G have different orders");
    t = threshold_q(family_polynomial(ref, family, limits), poly, limits);
    json tj{{"kind", to_string(t->kind)}, {"difference", json::parse(t->difference.to_json())}};
    if (t->kind == Threshold::Kind::Finite) {
      tj["q0"] = t->q0;
      tj["root_bound"] = str(t->root_bound);
    }
    out["threshold"] = tj;
  }
  if (g.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << poly.to_string() << '\n';
    if (t) {
      std::cout << "threshold: " << to_string(t->kind);
      if (t->kind == Threshold::Kind::Finite) std::cout << " q0=" << t->q0;
      std::cout << "  (reference - G = " << t->difference.to_string() << ")\n";
    }
  }
  return 0;
}

int cmd_bound(const Globals& g, const std::string& g_arg, const std::string& h_arg, int trials) {
  const Graph graph = resolve_graph(g_arg);
  const ConstraintGraph h = resolve_constraint(h_arg);
  const auto cert = best_bound(graph, h,
                               {OrderingStrategy::Natural, OrderingStrategy::Heuristic,
                                OrderingStrategy::ReverseDegeneracy},
                               trials, g.seed, g.limits());
  if (g.json) {
    std::cout << json{{"strategy", cert.strategy}, {"seed", cert.seed}, {"order", cert.order},
                      {"hom", str(cert.hom)},       {"lhs", str(cert.lhs)}, {"rhs", str(cert.rhs)},
                      {"holds", cert.holds}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "hom(G,H)^" << cert.d << " = " << cert.lhs << (cert.holds ? " <= " : " > ") << cert.rhs << "  ["
              << cert.strategy;
    if (cert.strategy == "heuristic") std::cout << " seed " << cert.seed;
    std::cout << "]\n";
  }
  return cert.holds ? 0 : kExitViolation;
}

int cmd_sweep(const Globals& g, const std::string& path) {
  SweepConfig config = SweepConfig::load(path);
  if (g.seed_set) config.seed = g.seed;
  if (g.workers > 0) config.workers = g.workers;
  const auto report = run_sweep(config, g.limits());
  persist(report);
  if (!config.output.empty() && config.output != "-") {
    const auto s = report.summary();
    std::cerr << "records: " << report.records.size() << ", violations: " << report.violations()
              << ", unexpected equalities: " << s["unexpected_equalities"] << '\n';
  }
  return report.violations() > 0 ? kExitViolation : 0;
}

int cmd_generate(const Globals& g, int n, int d, bool connected) {
  const auto graphs = enumerate_regular(n, d, connected);
  if (g.json) {
    json arr = json::array();
    for (const auto& x : graphs) arr.push_back(to_graph6(x));
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& x : graphs) std::cout << to_graph6(x) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homomorphism counts, constraint-graph types and regular-graph sweeps"};
  app.fallthrough();  // global flags may follow the subcommand
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized orderings")->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--workers", g.workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--guard-limit", g.guard_limit, "Override the state and DP-table budgets")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string g_arg, h_arg, family = "chromatic", reference, config;
  unsigned d = 1, d_max = 12;
  int n = 0, degree = 0, trials = 8;
  bool connected = false;

  auto* count = app.add_subcommand("count", "hom(G,H) from all three counters");
  count->add_option("G", g_arg, "graph6 file, graph6 string or catalog name")->required();
  count->add_option("H", h_arg, "constraint matrix file or catalog name")->required();
  count->callback([&] { action = [&] { return cmd_count(g, g_arg, h_arg); }; });

  auto* classify_cmd = app.add_subcommand("classify", "Structural profile, type and crossover table");
  classify_cmd->add_option("H", h_arg)->required();
  classify_cmd->add_option("--dmax", d_max, "Largest d in the comparison table")->check(CLI::Range(1U, 64U));
  classify_cmd->callback([&] { action = [&] { return cmd_classify(g, h_arg, d_max); }; });

  auto* closed = app.add_subcommand("closed", "Closed forms for hom(K_{d,d},H), hom(K_{d+1},H)");
  closed->add_option("H", h_arg)->required();
  closed->add_option("d", d)->required()->check(CLI::Range(1U, 256U));
  closed->callback([&] { action = [&] { return cmd_closed(g, h_arg, d); }; });

  auto* qpoly = app.add_subcommand("qpoly", "Polynomial in q and threshold against a reference");
  qpoly->add_option("G", g_arg)->required();
  qpoly->add_option("--family", family, "chromatic, loops:<l> or bip:<r>x<s>,...");
  qpoly->add_option("--reference", reference, "Reference graph for threshold_q");
  qpoly->callback([&] { action = [&] { return cmd_qpoly(g, g_arg, family, reference); }; });

  auto* bound = app.add_subcommand("bound", "Best product bound over orderings");
  bound->add_option("G", g_arg)->required();
  bound->add_option("H", h_arg)->required();
  bound->add_option("--trials", trials, "Heuristic restarts")->check(CLI::PositiveNumber);
  bound->callback([&] { action = [&] { return cmd_bound(g, g_arg, h_arg, trials); }; });

  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a JSON config");
  sweep->add_option("config", config)->required();
  sweep->callback([&] { action = [&] { return cmd_sweep(g, config); }; });

  auto* generate = app.add_subcommand("generate", "d-regular graphs on n vertices as graph6");
  generate->add_option("n", n)->required();
  generate->add_option("d", degree)->required();
  generate->add_flag("--connected", connected, "Connected graphs only");
  generate->callback([&] { action = [&] { return cmd_generate(g, n, degree, connected); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
