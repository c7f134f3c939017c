#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grasslin/ring/bigint.hpp"
#include "grasslin/ring/poly_abc.hpp"

namespace grasslin {

/// Element of C[x]/(x^order), stored densely as c_0..c_{order-1}.
///
/// C is BigInt or PolyABC. Every operation discards degrees >= order; binary
/// operations require equal orders.
template <typename C>
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(std::size_t order) : coeffs_(order, C(0)) {}
  TruncSeries(std::size_t order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order, C(0));
  }
  TruncSeries(std::size_t order, std::initializer_list<C> coeffs)
      : TruncSeries(order, std::vector<C>(coeffs)) {}

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    if (order > 0) s.coeffs_[0] = C(1);
    return s;
  }

  /// 1 + step * x, the building block of most generating functions here.
  static TruncSeries linear(std::size_t order, const C& step) {
    return TruncSeries(order, {C(1), step});
  }

  std::size_t order() const { return coeffs_.size(); }
  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  void set(std::size_t k, C value) {
    if (k < coeffs_.size()) coeffs_[k] = std::move(value);
  }
  const std::vector<C>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }

  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
    f.require_same_order(g);
    const std::size_t n = f.order();
    TruncSeries h(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(f.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return h;
  }
  TruncSeries& operator*=(const TruncSeries& rhs) { return *this = *this * rhs; }

  friend TruncSeries operator*(const C& s, TruncSeries f) {
    for (auto& v : f.coeffs_) v = s * v;
    return f;
  }

  /// h with h * g == f modulo x^order, by forward substitution.
  friend TruncSeries operator/(const TruncSeries& f, const TruncSeries& g) {
    f.require_same_order(g);
    const std::size_t n = f.order();
    if (n == 0) return f;
    if (!is_unit(g.coeffs_[0])) throw std::domain_error("series division: constant term of divisor is not a unit");
    // The inverse of +-1 is itself.
    const C& inv = g.coeffs_[0];
    TruncSeries h(n);
    for (std::size_t k = 0; k < n; ++k) {
      C acc = f.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= g.coeffs_[j] * h.coeffs_[k - j];
      h.coeffs_[k] = inv * acc;
    }
    return h;
  }

  TruncSeries pow(unsigned exponent) const {
    TruncSeries result = one(order());
    TruncSeries base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  /// Same coefficients viewed at a smaller (or larger, zero-padded) order.
  TruncSeries with_order(std::size_t order) const { return TruncSeries(order, coeffs_); }

  friend bool operator==(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() != g.order()) return false;
    for (std::size_t k = 0; k < f.order(); ++k) {
      if (!(f.coeffs_[k] == g.coeffs_[k])) return false;
    }
    return true;
  }

 private:
  void require_same_order(const TruncSeries& rhs) const {
    if (order() != rhs.order()) {
      throw std::invalid_argument("truncation orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(rhs.order()));
    }
  }

  std::vector<C> coeffs_;
};

template <typename C>
std::ostream& operator<<(std::ostream& os, const TruncSeries<C>& f) {
  bool first = true;
  for (std::size_t k = 0; k < f.order(); ++k) {
    if (is_zero(f[k])) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << f[k] << ")x^" << k;
  }
  if (first) os << '0';
  return os << " mod x^" << f.order();
}

using IntSeries = TruncSeries<BigInt>;
using PolySeries = TruncSeries<PolyABC>;

/// Evaluates a series over PolyABC at an integer point.
IntSeries evaluate(const PolySeries& f, const Triple& t);

}  // namespace grasslin
