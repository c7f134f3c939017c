#pragma once

#include <random>

#include "grasslin/schubert/gr2.hpp"

namespace grasslin::testing {

/// Deterministic generators for randomized identities.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  BigInt big(long magnitude = 50) {
    BigInt v(uniform(-magnitude, magnitude));
    // Occasionally push past 64 bits.
    if (uniform(0, 9) == 0) v *= BigInt("123456789012345678901234567890");
    return v;
  }

  PolyABC poly(int max_terms = 5, unsigned max_exp = 3) {
    PolyABC out;
    const long terms = uniform(0, max_terms);
    for (long t = 0; t < terms; ++t) {
      const Exponent e{static_cast<std::uint32_t>(uniform(0, max_exp)), static_cast<std::uint32_t>(uniform(0, max_exp)),
                       static_cast<std::uint32_t>(uniform(0, max_exp))};
      out += PolyABC::monomial(e, big());
    }
    return out;
  }

  TruncSeries<BigInt> int_series(std::size_t order) {
    std::vector<BigInt> c;
    for (std::size_t k = 0; k < order; ++k) c.push_back(big());
    return {order, c};
  }

  TruncSeries<PolyABC> poly_series(std::size_t order) {
    std::vector<PolyABC> c;
    for (std::size_t k = 0; k < order; ++k) c.push_back(poly(3, 2));
    return {order, c};
  }

  /// A series with constant term +-1.
  template <typename S>
  S make_unit(S s) {
    using C = std::decay_t<decltype(s[0])>;
    s.set(0, coin() ? C(1) : C(-1));
    return s;
  }

  Partition2 partition(int m) {
    const int i = static_cast<int>(uniform(0, m - 2));
    return {i, static_cast<int>(uniform(0, i))};
  }

  SchubertClass schubert(int m, int max_terms = 4) {
    SchubertClass out(Ambient::of(m));
    const long terms = uniform(0, max_terms);
    for (long t = 0; t < terms; ++t) out.add_term(partition(m), BigInt(uniform(-9, 9)));
    return out;
  }

  SchubertClass pure(int m, int k) {
    SchubertClass out(Ambient::of(m));
    for (int j = 0; 2 * j <= k; ++j) {
      if (k - j <= m - 2) out.add_term({k - j, j}, BigInt(uniform(-9, 9)));
    }
    return out;
  }

  Triple triple(long cap) {
    const long a = uniform(1, cap);
    const long b = uniform(0, a * a);
    return {a, b, uniform(-b, cap)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace grasslin::testing
