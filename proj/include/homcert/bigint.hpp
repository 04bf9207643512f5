#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace homcert {

// Exact integers everywhere a certificate is produced. BigCount is used for
// quantities that are counts (never negative); BigInt for signed sums such
// as polynomial coefficients and inclusion-exclusion partial sums.
using BigInt = mpz_class;
using BigCount = mpz_class;
using BigRational = mpq_class;

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow(unsigned long base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// -1, 0 or 1.
int compare(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

// Saturating a^b in 64 bits; returns UINT64_MAX on overflow.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent);

}  // namespace homcert
