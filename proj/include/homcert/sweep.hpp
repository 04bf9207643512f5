#pragma once

#include "homcert/errors.hpp"
#include "homcert/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace homcert {

inline constexpr const char* kReportSchema = "homcert/1";
inline constexpr const char* kVersion = "0.1.0";

/// Checks: "conjecture", "lemma-c4", "lemma-p4c4", "mt-bound", "lambda-identity".
struct SweepConfig {
  int n_min = 4;
  int n_max = 8;
  int d_min = 2;
  int d_max = 3;
  bool connected = true;
  bool generate = true;                    // built-in enumeration of (n, d) graphs
  std::vector<std::string> graph6_files;   // extra graphs, one graph6 per line

  std::vector<std::string> h_names;        // catalog names
  int h_catalog_max_k = 0;                 // named families up to this order
  int h_all_max_k = 0;                     // every constraint graph up to this order
  std::vector<std::string> h_files;        // constraint matrix files

  std::vector<std::string> checks;
  std::string output;                      // JSON lines; "" or "-" for stdout
  std::string csv;                         // optional per-check summary table
  std::uint64_t seed = 1;
  int workers = 1;
  int orderings = 5;                       // seeded heuristic orderings for mt-bound

  /// Throws std::invalid_argument on unknown keys, bad types or bad values.
  static SweepConfig from_json(const nlohmann::json& j);
  static SweepConfig load(const std::string& path);
  nlohmann::json to_json() const;
  void validate() const;
};

struct SweepRecord {
  std::string check;
  std::string graph6;
  int n = 0;
  int d = 0;
  std::string h;                // empty for per-graph checks
  std::string status;           // "ok", "violation" or "skipped"
  std::string reason;           // skipped: the guard or precondition
  bool equality = false;
  nlohmann::json detail;        // exact certificates, integers as decimal strings

  nlohmann::json to_json() const;
};

struct SweepReport {
  SweepConfig config;
  std::size_t graphs = 0;
  std::size_t constraints = 0;
  std::vector<SweepRecord> records;

  std::size_t violations() const;
  nlohmann::json summary() const;
  /// One record per line, then the summary object.
  void write_jsonl(std::ostream& out) const;
  void write_csv(std::ostream& out) const;
};

SweepReport run_sweep(const SweepConfig& config, const Limits& limits = Limits::defaults());

/// Writes the report to config.output (and config.csv when set).
void persist(const SweepReport& report);

}  // namespace homcert
