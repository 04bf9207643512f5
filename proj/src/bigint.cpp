#include "homcert/bigint.hpp"
#include "homcert/errors.hpp"

#include <cstdlib>
#include <limits>

namespace homcert {

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

int compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) { return x.get_str(); }

std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("HOMCERT_GUARD_LIMIT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) limits = limits.with_guard_limit(v);
  }
  return limits;
}

const Limits& Limits::defaults() {
  static const Limits limits = from_environment();
  return limits;
}

Limits Limits::with_guard_limit(std::uint64_t budget) const {
  Limits out = *this;
  out.state_budget = budget;
  out.dp_table_entries = budget;
  return out;
}

}  // namespace homcert
