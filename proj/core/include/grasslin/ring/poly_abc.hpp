#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "grasslin/ring/bigint.hpp"

namespace grasslin {

/// Exponent vector of a monomial a^ea b^eb c^ec. Ordered lexicographically.
struct Exponent {
  std::uint32_t ea = 0;
  std::uint32_t eb = 0;
  std::uint32_t ec = 0;

  std::uint32_t total() const { return ea + eb + ec; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// An integer point (a, b, c).
struct Triple {
  long a = 0;
  long b = 0;
  long c = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Sparse polynomial in Z[a, b, c]. Zero coefficients are never stored.
class PolyABC {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  PolyABC() = default;
  PolyABC(long constant);  // NOLINT(google-explicit-constructor)
  PolyABC(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static PolyABC monomial(Exponent e, const BigInt& coeff = 1);
  static PolyABC a() { return monomial({1, 0, 0}); }
  static PolyABC b() { return monomial({0, 1, 0}); }
  static PolyABC c() { return monomial({0, 0, 1}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  BigInt coeff(Exponent e) const;
  std::uint32_t total_degree() const;

  PolyABC& operator+=(const PolyABC& rhs);
  PolyABC& operator-=(const PolyABC& rhs);
  PolyABC& operator*=(const PolyABC& rhs);
  PolyABC& operator*=(const BigInt& scalar);

  friend PolyABC operator+(PolyABC lhs, const PolyABC& rhs) { return lhs += rhs; }
  friend PolyABC operator-(PolyABC lhs, const PolyABC& rhs) { return lhs -= rhs; }
  friend PolyABC operator*(const PolyABC& lhs, const PolyABC& rhs);
  friend PolyABC operator*(PolyABC lhs, const BigInt& s) { return lhs *= s; }
  friend PolyABC operator*(const BigInt& s, PolyABC rhs) { return rhs *= s; }
  PolyABC operator-() const;

  friend bool operator==(const PolyABC&, const PolyABC&) = default;

  PolyABC pow(unsigned exponent) const;

  BigInt evaluate(const BigInt& a, const BigInt& b, const BigInt& c) const;
  BigInt evaluate(const Triple& t) const { return evaluate(t.a, t.b, t.c); }

  /// Replaces a, b, c by the given polynomials.
  PolyABC substitute(const PolyABC& a, const PolyABC& b, const PolyABC& c) const;

  /// Human-readable form, e.g. "a^2*b - 4*c + 1". Terms in descending order.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigInt& coeff);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyABC& p);

/// Unit test for the truncated-series divisor: constant +-1.
bool is_unit(const PolyABC& value);

inline bool is_zero(const PolyABC& value) { return value.is_zero(); }

}  // namespace grasslin
