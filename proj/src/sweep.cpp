#include "homcert/sweep.hpp"

#include "homcert/bounds.hpp"
#include "homcert/canonical.hpp"
#include "homcert/catalog.hpp"
#include "homcert/closed_forms.hpp"
#include "homcert/hom.hpp"
#include "homcert/regular.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace homcert {

namespace {

using nlohmann::json;

const std::vector<std::string> kChecks = {"conjecture", "lemma-c4", "lemma-p4c4", "mt-bound",
                                          "lambda-identity"};

std::string str(const BigInt& x) { return to_string(x); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool wants(const SweepConfig& c, std::string_view check) {
  return std::find(c.checks.begin(), c.checks.end(), check) != c.checks.end();
}

}  // namespace

// ---------------------------------------------------------------- config

SweepConfig SweepConfig::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
  static const std::set<std::string> known = {
      "n", "d", "connected", "generate", "graph6_files", "h", "h_catalog_max_k", "h_all_max_k",
      "h_files", "checks", "output", "csv", "seed", "workers", "orderings"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("sweep config: unknown key '" + key + "'");
  }
  SweepConfig c;
  try {
    const auto range = [&](const char* key, int& lo, int& hi) {
      if (!j.contains(key)) return;
      const auto& v = j.at(key);
      if (v.is_number_integer()) {
        lo = hi = v.get<int>();
      } else if (v.is_array() && v.size() == 2) {
        lo = v[0].get<int>();
        hi = v[1].get<int>();
      } else {
        throw std::invalid_argument(std::string("sweep config: '") + key + "' must be an integer or [lo, hi]");
      }
    };
    range("n", c.n_min, c.n_max);
    range("d", c.d_min, c.d_max);
    c.connected = j.value("connected", c.connected);
    c.generate = j.value("generate", c.generate);
    c.graph6_files = j.value("graph6_files", c.graph6_files);
    c.h_names = j.value("h", c.h_names);
    c.h_catalog_max_k = j.value("h_catalog_max_k", c.h_catalog_max_k);
    c.h_all_max_k = j.value("h_all_max_k", c.h_all_max_k);
    c.h_files = j.value("h_files", c.h_files);
    c.checks = j.value("checks", std::vector<std::string>{"conjecture"});
    c.output = j.value("output", c.output);
    c.csv = j.value("csv", c.csv);
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);
    c.orderings = j.value("orderings", c.orderings);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }
  c.validate();
  return c;
}

SweepConfig SweepConfig::load(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("sweep config " + path + ": " + e.what());
  }
  return from_json(j);
}

json SweepConfig::to_json() const {
  return json{{"n", {n_min, n_max}},
              {"d", {d_min, d_max}},
              {"connected", connected},
              {"generate", generate},
              {"graph6_files", graph6_files},
              {"h", h_names},
              {"h_catalog_max_k", h_catalog_max_k},
              {"h_all_max_k", h_all_max_k},
              {"h_files", h_files},
              {"checks", checks},
              {"output", output},
              {"csv", csv},
              {"seed", seed},
              {"workers", workers},
              {"orderings", orderings}};
}

void SweepConfig::validate() const {
  const auto fail = [](const std::string& m) { throw std::invalid_argument("sweep config: " + m); };
  if (n_min < 1 || n_min > n_max) fail("n range must satisfy 1 <= lo <= hi");
  if (generate && n_max > kMaxGeneratedOrder) fail("built-in generation stops at n = 12; use graph6_files");
  if (d_min < 1 || d_min > d_max) fail("d range must satisfy 1 <= lo <= hi");
  if (checks.empty()) fail("no checks requested");
  for (const auto& c : checks) {
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) fail("unknown check '" + c + "'");
  }
  const bool pair_checks = wants(*this, "conjecture") || wants(*this, "mt-bound");
  if (pair_checks && h_names.empty() && h_files.empty() && h_catalog_max_k == 0 && h_all_max_k == 0) {
    fail("conjecture and mt-bound need constraint graphs (h, h_files, h_catalog_max_k or h_all_max_k)");
  }
  if (h_all_max_k < 0 || h_all_max_k > 6) fail("h_all_max_k must be in [0, 6]");
  if (h_catalog_max_k < 0 || h_catalog_max_k > 16) fail("h_catalog_max_k must be in [0, 16]");
  if (workers < 1) fail("workers must be at least 1");
  if (orderings < 1) fail("orderings must be at least 1");
}

// ---------------------------------------------------------------- records

json SweepRecord::to_json() const {
  json j{{"type", "record"}, {"check", check}, {"graph6", graph6}, {"n", n}, {"d", d}};
  if (!h.empty()) j["h"] = h;
  j["status"] = status;
  if (!reason.empty()) j["reason"] = reason;
  j["equality"] = equality;
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

std::size_t SweepReport::violations() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const SweepRecord& r) { return r.status == "violation"; }));
}

json SweepReport::summary() const {
  json checks = json::object();
  for (const auto& name : config.checks) {
    checks[name] = {{"records", 0}, {"ok", 0}, {"violations", 0}, {"skipped", 0}, {"equalities", 0}};
  }
  json extremal = json::array();
  std::size_t unexpected = 0;
  for (const auto& r : records) {
    auto& c = checks[r.check];
    c["records"] = c["records"].get<int>() + 1;
    const char* bucket = r.status == "ok" ? "ok" : r.status == "violation" ? "violations" : "skipped";
    c[bucket] = c[bucket].get<int>() + 1;
    if (r.equality) {
      c["equalities"] = c["equalities"].get<int>() + 1;
      json e{{"check", r.check}, {"graph6", r.graph6}};
      if (!r.h.empty()) e["h"] = r.h;
      extremal.push_back(e);
      if (r.detail.contains("expected_equality") && !r.detail["expected_equality"].get<bool>()) ++unexpected;
    }
  }
  return json{{"type", "summary"},
              {"schema", kReportSchema},
              {"version", kVersion},
              {"seed", config.seed},
              {"config", config.to_json()},
              {"graphs", graphs},
              {"constraints", constraints},
              {"records", records.size()},
              {"violations", violations()},
              {"unexpected_equalities", unexpected},
              {"checks", checks},
              {"extremal", extremal}};
}

void SweepReport::write_jsonl(std::ostream& out) const {
  for (const auto& r : records) out << r.to_json().dump() << '\n';
  out << summary().dump() << '\n';
}

void SweepReport::write_csv(std::ostream& out) const {
  const json s = summary();
  out << "check,records,ok,violations,skipped,equalities\n";
  for (const auto& name : config.checks) {
    const auto& c = s["checks"][name];
    out << name << ',' << c["records"] << ',' << c["ok"] << ',' << c["violations"] << ',' << c["skipped"] << ','
        << c["equalities"] << '\n';
  }
}

void persist(const SweepReport& report) {
  if (report.config.output.empty() || report.config.output == "-") {
    report.write_jsonl(std::cout);
  } else {
    std::ofstream out(report.config.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report.config.output);
    report.write_jsonl(out);
  }
  if (!report.config.csv.empty()) {
    std::ofstream out(report.config.csv, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report.config.csv);
    report.write_csv(out);
  }
}

// ---------------------------------------------------------------- run

namespace {

struct Subject {
  Graph g;
  int n = 0;
  int d = 0;
  std::string graph6;
};

struct Reference {
  std::optional<CanonicalCode> bipartite_union;  // (n/2d) K_{d,d}
  std::optional<CanonicalCode> clique_union;     // (n/(d+1)) K_{d+1}
  BigCount c4;
  BigInt p4_minus_c4;
  IndepProfile indep;
};

struct ConstraintEntry {
  std::string id;
  ConstraintGraph h;
};

// hom(K_{d,d},H) and hom(K_{d+1},H), or the guard that refused them.
struct BoundPair {
  BigCount kdd;
  BigCount kdp1;
  std::string guard;
};

const std::vector<BigRational>& lambdas() {
  static const std::vector<BigRational> v = {BigRational(1, 4), BigRational(1, 2), BigRational(1), BigRational(2)};
  return v;
}

std::vector<ConstraintEntry> load_constraints(const SweepConfig& c) {
  std::vector<ConstraintEntry> raw;
  for (const auto& name : c.h_names) raw.push_back({name, catalog_constraint(name)});
  if (c.h_catalog_max_k > 0) {
    for (auto& e : constraint_catalog(c.h_catalog_max_k)) raw.push_back({e.name, e.graph});
  }
  if (c.h_all_max_k > 0) {
    for (auto& e : all_constraint_graphs(c.h_all_max_k)) raw.push_back({e.name, e.graph});
  }
  for (const auto& path : c.h_files) raw.push_back({path, parse_constraint(read_file(path)).graph});
  std::vector<ConstraintEntry> out;
  std::set<CanonicalCode> seen;
  for (auto& e : raw) {
    if (seen.insert(canonical_code(e.h)).second) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Subject> load_graphs(const SweepConfig& c) {
  std::vector<Subject> out;
  if (c.generate) {
    for (int n = c.n_min; n <= c.n_max; ++n) {
      for (int d = c.d_min; d <= c.d_max; ++d) {
        if ((n * d) % 2 != 0 || d >= n) continue;
        for (auto& g : enumerate_regular(n, d, c.connected)) out.push_back({g, n, d, to_graph6(g)});
      }
    }
  }
  for (const auto& path : c.graph6_files) {
    std::istringstream lines(read_file(path));
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      const auto d = g.regular_degree();
      if (!d || *d < 1) {
        throw std::invalid_argument(path + ":" + std::to_string(number) + ": graph is not d-regular with d >= 1");
      }
      out.push_back({g, g.order(), *d, to_graph6(g)});
    }
  }
  return out;
}

Reference make_reference(int n, int d) {
  Reference r;
  if (n % (2 * d) == 0) {
    const Graph u = copies(complete_bipartite(d, d), n / (2 * d));
    r.bipartite_union = canonical_code(u);
    r.c4 = count_c4(u);
    r.indep = indep_profile(u);
  }
  if (n % (d + 1) == 0) {
    const Graph u = copies(complete_graph(d + 1), n / (d + 1));
    r.clique_union = canonical_code(u);
    r.p4_minus_c4 = count_p4(u) - count_c4(u);
  }
  return r;
}

class Runner {
 public:
  Runner(const SweepConfig& config, const Limits& limits, std::vector<Subject> graphs,
         std::vector<ConstraintEntry> constraints)
      : config_(config), limits_(limits), graphs_(std::move(graphs)), constraints_(std::move(constraints)) {
    for (const auto& s : graphs_) {
      if (!references_.contains({s.n, s.d})) references_.emplace(std::make_pair(s.n, s.d), make_reference(s.n, s.d));
      if (!bounds_.contains(s.d)) bounds_[s.d] = bound_pairs(s.d);
    }
  }

  std::vector<SweepRecord> run() {
    std::vector<std::vector<SweepRecord>> slots(graphs_.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
      for (std::size_t i = next++; i < graphs_.size(); i = next++) {
        try {
          slots[i] = records_for(graphs_[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const int workers = std::min<int>(config_.workers, std::max<int>(1, static_cast<int>(graphs_.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRecord> out;
    for (auto& s : slots) {
      for (auto& r : s) out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::vector<BoundPair> bound_pairs(int d) const {
    std::vector<BoundPair> out;
    for (const auto& c : constraints_) {
      BoundPair b;
      try {
        b.kdd = hom_kdd(c.h, static_cast<unsigned>(d), limits_);
        b.kdp1 = hom_kdp1(c.h, static_cast<unsigned>(d), limits_);
      } catch (const ResourceError& e) {
        b.guard = e.guard();
      }
      out.push_back(std::move(b));
    }
    return out;
  }

  SweepRecord base(const std::string& check, const Subject& s, const std::string& h = {}) const {
    SweepRecord r;
    r.check = check;
    r.graph6 = s.graph6;
    r.n = s.n;
    r.d = s.d;
    r.h = h;
    r.status = "ok";
    return r;
  }

  static SweepRecord skipped(SweepRecord r, std::string reason) {
    r.status = "skipped";
    r.reason = std::move(reason);
    return r;
  }

  std::vector<SweepRecord> records_for(const Subject& s) const {
    std::vector<SweepRecord> out;
    const Reference& ref = references_.at({s.n, s.d});
    std::optional<CanonicalCode> code;
    const auto own_code = [&]() -> const CanonicalCode& {
      if (!code) code = canonical_code(s.g);
      return *code;
    };

    if (wants(config_, "lemma-c4")) {
      auto r = base("lemma-c4", s);
      if (!ref.bipartite_union) {
        out.push_back(skipped(std::move(r), "precondition: 2d does not divide n"));
      } else if (count_c3(s.g) != 0) {
        out.push_back(skipped(std::move(r), "precondition: G has a triangle"));
      } else {
        const BigCount c4 = count_c4(s.g);
        const bool is_ref = own_code() == *ref.bipartite_union;
        r.equality = c4 == ref.c4;
        r.detail = {{"c4", str(c4)}, {"reference_c4", str(ref.c4)}, {"is_reference", is_ref}};
        if (c4 > ref.c4 || (r.equality && !is_ref)) r.status = "violation";
        out.push_back(std::move(r));
      }
    }

    if (wants(config_, "lemma-p4c4")) {
      auto r = base("lemma-p4c4", s);
      if (!ref.clique_union) {
        out.push_back(skipped(std::move(r), "precondition: d+1 does not divide n"));
      } else {
        const BigInt value = count_p4(s.g) - count_c4(s.g);
        const bool is_ref = own_code() == *ref.clique_union;
        r.equality = value == ref.p4_minus_c4;
        r.detail = {{"p4_minus_c4", str(value)}, {"reference", str(ref.p4_minus_c4)}, {"is_reference", is_ref}};
        if (value < ref.p4_minus_c4 || (r.equality && !is_ref)) r.status = "violation";
        out.push_back(std::move(r));
      }
    }

    if (wants(config_, "lambda-identity")) {
      auto r = base("lambda-identity", s);
      if (!ref.bipartite_union) {
        out.push_back(skipped(std::move(r), "precondition: 2d does not divide n"));
      } else {
        const IndepProfile mine = indep_profile(s.g);
        json values = json::array();
        bool all_equal = true;
        for (const auto& lambda : lambdas()) {
          const BigRational lhs = mine.evaluate(lambda);
          const BigRational rhs = ref.indep.evaluate(lambda);
          if (lhs > rhs) r.status = "violation";
          all_equal = all_equal && lhs == rhs;
          values.push_back({{"lambda", to_string(lambda)}, {"value", to_string(lhs)}, {"reference", to_string(rhs)}});
        }
        r.equality = all_equal;
        r.detail = {{"alpha", mine.alpha}, {"evaluations", values}};
        out.push_back(std::move(r));
      }
    }

    const bool conj = wants(config_, "conjecture");
    const bool mt = wants(config_, "mt-bound");
    if (!conj && !mt) return out;

    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      const auto& c = constraints_[i];
      const auto& bounds = bounds_.at(s.d)[i];
      std::optional<BigCount> hom;
      std::string guard = bounds.guard;
      if (guard.empty()) {
        try {
          hom = hom_dp(s.g, c.h, limits_);
        } catch (const ResourceError& e) {
          guard = e.guard();
        }
      }
      if (conj) {
        auto r = base("conjecture", s, c.id);
        if (!hom) {
          out.push_back(skipped(std::move(r), "guard: " + guard));
        } else {
          const auto v = conjecture_rhs_compare(s.n, s.d, *hom, bounds.kdd, bounds.kdp1);
          const bool expected = c.h.is_complete_looped() ||
                                (ref.bipartite_union && own_code() == *ref.bipartite_union) ||
                                (ref.clique_union && own_code() == *ref.clique_union);
          r.status = v.satisfied ? "ok" : "violation";
          r.equality = v.equality;
          r.detail = {{"hom", str(v.hom)},
                      {"hom_kdd", str(v.kdd)},
                      {"hom_kdp1", str(v.kdp1)},
                      {"exponent", 2 * s.d * (s.d + 1)},
                      {"larger_bound", v.larger_bound == Dominance::Clique ? "kdp1"
                                       : v.larger_bound == Dominance::Bipartite ? "kdd"
                                                                                : "both"},
                      {"meets_kdd", v.meets_kdd},
                      {"meets_kdp1", v.meets_kdp1},
                      {"expected_equality", expected}};
          out.push_back(std::move(r));
        }
      }
      if (mt) {
        auto r = base("mt-bound", s, c.id);
        if (!hom) {
          out.push_back(skipped(std::move(r), "guard: " + guard));
          continue;
        }
        try {
          json certs = json::array();
          BigCount lhs;
          for (int t = 0; t < config_.orderings; ++t) {
            const std::uint64_t seed = config_.seed + static_cast<std::uint64_t>(t);
            const auto cert = mt_bound(s.g, c.h, ordering_heuristic(s.g, seed).order, *hom, limits_);
            lhs = cert.lhs;
            if (!cert.holds) r.status = "violation";
            if (cert.lhs == cert.rhs) r.equality = true;
            certs.push_back({{"seed", seed}, {"order", cert.order}, {"rhs", str(cert.rhs)}, {"holds", cert.holds}});
          }
          r.detail = {{"hom", str(*hom)}, {"lhs", str(lhs)}, {"certificates", certs}};
          out.push_back(std::move(r));
        } catch (const ResourceError& e) {
          out.push_back(skipped(std::move(r), "guard: " + e.guard()));
        }
      }
    }
    return out;
  }

  const SweepConfig& config_;
  const Limits& limits_;
  std::vector<Subject> graphs_;
  std::vector<ConstraintEntry> constraints_;
  std::map<std::pair<int, int>, Reference> references_;
  std::map<int, std::vector<BoundPair>> bounds_;
};

}  // namespace

SweepReport run_sweep(const SweepConfig& config, const Limits& limits) {
  config.validate();
  SweepReport report;
  report.config = config;
  auto graphs = load_graphs(config);
  auto constraints = load_constraints(config);
  report.graphs = graphs.size();
  report.constraints = constraints.size();
  report.records = Runner(config, limits, std::move(graphs), std::move(constraints)).run();
  return report;
}

}  // namespace homcert
