#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcert {

/// Malformed textual input. offset() is the byte offset of the first bad byte
/// (or the line number for line-oriented formats, see the parser docs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A resource guard refused to run a computation. Never a silent fallback.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string guard, const std::string& what)
      : std::runtime_error(guard + ": " + what), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// Hard caps for the exponential routines.
///
/// `state_budget` bounds both the brute-force map enumeration (|V(H)|^|V(G)|)
/// and the dynamic-programming table size. HOMCERT_GUARD_LIMIT overrides it.
struct Limits {
  std::uint64_t state_budget = 1'000'000'000ULL;
  std::uint64_t dp_table_entries = 1ULL << 22;
  int subset_edges = 26;        // 2^|E| subset sums
  int chromatic_vertices = 20;  // deletion-contraction
  int image_vertices = 16;      // image enumeration over V(H)

  static const Limits& defaults();
  static Limits from_environment();
  Limits with_guard_limit(std::uint64_t budget) const;
};

}  // namespace homcert
