#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grasslin {

/// Arbitrary-precision signed integer. GMP's canonical form gives a unique zero.
using BigInt = mpz_class;

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal string. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

/// Unit inverse over Z: +-1 map to themselves, anything else is not a unit.
bool is_unit(const BigInt& value);

inline bool is_zero(const BigInt& value) { return sgn(value) == 0; }

}  // namespace grasslin
