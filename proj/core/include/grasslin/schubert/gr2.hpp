#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasslin/ring/bigint.hpp"
#include "grasslin/ring/trunc_series.hpp"
#include "grasslin/schubert/graded_class.hpp"

namespace grasslin {

/// Product in H*(Gr(2, m)).
///
/// Each basis product is ω_{i,j} ω_{k,l} = ω_{p,0} ω_{q,0} ω_{1,1}^{j+l} with
/// p = i - j, q = k - l, and ω_{p,0} ω_{q,0} = Σ_{t=0}^{min(p,q)} ω_{p+q-t,t}.
/// Terms leaving the box vanish.
template <typename C>
GradedClass<C> mul2(const GradedClass<C>& lhs, const GradedClass<C>& rhs) {
  lhs.require_same_ambient(rhs);
  const Ambient& amb = lhs.ambient();
  const bool stable = amb.is_stable();
  const int cap = stable ? 0 : amb.m() - 2;
  GradedClass<C> out(amb);
  for (const auto& [x, u] : lhs.terms()) {
    for (const auto& [y, v] : rhs.terms()) {
      const int p = x.i - x.j;
      const int q = y.i - y.j;
      const int shift = x.j + y.j;
      int t_lo = 0;
      if (!stable) t_lo = std::max(0, p + q + shift - cap);
      const int t_hi = std::min(p, q);
      if (t_lo > t_hi) continue;
      C uv = u * v;
      for (int t = t_lo; t <= t_hi; ++t) out.add_term({p + q - t + shift, t + shift}, uv);
    }
  }
  return out;
}

template <typename C>
GradedClass<C> operator*(const GradedClass<C>& lhs, const GradedClass<C>& rhs) {
  return mul2(lhs, rhs);
}

template <typename C>
GradedClass<C> pow(const GradedClass<C>& base, unsigned exponent) {
  GradedClass<C> result = GradedClass<C>::one(base.ambient());
  GradedClass<C> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = mul2(result, b);
    exponent >>= 1U;
    if (exponent != 0) b = mul2(b, b);
  }
  return result;
}

/// Coefficient of the top class ω_{m-2,m-2}, i.e. the degree of a top-degree class.
template <typename C>
C top_value(const GradedClass<C>& cls) {
  const int m = cls.ambient().m();
  return cls.coeff({m - 2, m - 2});
}

/// Intersection number of two pure classes of complementary degree:
/// ω_{i,j} · ω_{k,l} = 1 iff i + l = m - 2 = j + k, else 0.
template <typename C>
C pairing(int m, const GradedClass<C>& lhs, const GradedClass<C>& rhs) {
  const Ambient amb = Ambient::of(m);
  if (!(lhs.ambient() == amb) || !(rhs.ambient() == amb)) {
    throw std::invalid_argument("pairing: classes must live on Gr(2," + std::to_string(m) + ")");
  }
  if (lhs.is_zero() || rhs.is_zero()) return C(0);
  auto dl = lhs.pure_degree();
  auto dr = rhs.pure_degree();
  if (!dl || !dr || *dl + *dr != 2 * m - 4) {
    throw std::invalid_argument("pairing: degrees must be pure and sum to " + std::to_string(2 * m - 4));
  }
  C sum(0);
  for (const auto& [x, u] : lhs.terms()) {
    auto it = rhs.terms().find(Partition2{m - 2 - x.j, m - 2 - x.i});
    if (it != rhs.terms().end()) sum += u * it->second;
  }
  return sum;
}

/// The dual cycle (m-2-j, m-2-i). Throws std::out_of_range outside the box.
Partition2 dual_cycle(int m, Partition2 p);

/// deg(ω_{i,j} · ω_{1,0}^{2m-4-i-j}) = (2m-4-i-j)! (i-j+1) / ((m-2-i)! (m-1-j)!), a two-row hook count.
BigInt degree_of(int m, Partition2 p);

/// The monomial ω_{1,0}^{k-2i} ω_{1,1}^i expanded in the Schubert basis.
SchubertClass monomial_class(const Ambient& ambient, int k, int i);

/// Coordinates of a pure degree-k class (k <= m - 2) in the monomial basis
/// {ω_{1,0}^{k-2i} ω_{1,1}^i : 0 <= i <= k/2}. Entry i multiplies the i-th monomial.
///
/// The change of basis is unitriangular: ω_{1,0}^{k-2i} ω_{1,1}^i has leading
/// term ω_{k-i,i} and otherwise only ω_{k-i-s,i+s}, s >= 1.
template <typename C>
std::vector<C> to_monomial(int m, const GradedClass<C>& cls, int k) {
  if (k > m - 2) {
    throw std::domain_error("monomial basis is linearly dependent in degree " + std::to_string(k) +
                            " > m - 2 = " + std::to_string(m - 2));
  }
  if (k < 0) throw std::invalid_argument("negative degree");
  if (!(cls.ambient() == Ambient::of(m))) throw std::invalid_argument("to_monomial: ambient mismatch");
  if (auto d = cls.pure_degree(); d && *d != k) throw std::invalid_argument("to_monomial: class is not of degree k");
  if (!cls.is_zero() && !cls.pure_degree()) throw std::invalid_argument("to_monomial: class is not pure");

  std::vector<C> coords(static_cast<std::size_t>(k / 2 + 1), C(0));
  GradedClass<C> residual = cls;
  for (int i = 0; i <= k / 2; ++i) {
    C lead = residual.coeff({k - i, i});
    if (grasslin::is_zero(lead)) continue;
    coords[static_cast<std::size_t>(i)] = lead;
    const SchubertClass mono = monomial_class(cls.ambient(), k, i);
    for (const auto& [p, v] : mono.terms()) residual.add_term(p, -(C(v) * lead));
  }
  if (!residual.is_zero()) throw std::logic_error("to_monomial: triangular solve left a residual");
  return coords;
}

template <typename C>
std::vector<C> to_monomial(int m, const GradedClass<C>& cls) {
  auto d = cls.pure_degree();
  if (!d) throw std::invalid_argument("to_monomial: class must be nonzero and pure; pass the degree explicitly");
  return to_monomial(m, cls, *d);
}

/// Truncation order of Z[ω_{1,0}]/(ω_{1,0}^{m-1}).
inline std::size_t q10_order(int m) { return static_cast<std::size_t>(m - 1); }
/// Truncation order of Z[ω_{1,1}]/(ω_{1,1}^{⌊(m-2)/2⌋+1}).
inline std::size_t q11_order(int m) { return static_cast<std::size_t>((m - 2) / 2 + 1); }

/// Image in Z[x]/(x^{m-1}) under ω_{1,0} -> x, ω_{1,1} -> 0.
///
/// ω_{i,j} = ω_{i-j,0} ω_{1,1}^j and ω_{s,0} ≡ ω_{1,0}^s modulo ω_{1,1}, so the
/// image of ω_{i,j} is x^i when j = 0 and 0 otherwise. This is a ring map and
/// agrees with the ω_{1,0}^k-coordinate of to_monomial for k <= m - 2.
template <typename C>
TruncSeries<C> project_q10(const GradedClass<C>& cls) {
  const int m = cls.ambient().m();
  std::vector<C> acc(q10_order(m), C(0));
  for (const auto& [p, v] : cls.terms()) {
    if (p.j == 0 && p.i < static_cast<int>(acc.size())) acc[static_cast<std::size_t>(p.i)] += v;
  }
  return TruncSeries<C>(q10_order(m), std::move(acc));
}

/// Image in Z[y]/(y^{⌊(m-2)/2⌋+1}) under ω_{1,0} -> 0, ω_{1,1} -> y.
///
/// Modulo ω_{1,0}, ω_{s,0} ≡ -ω_{1,1} ω_{s-2,0}, so ω_{i,j} maps to
/// (-1)^{(i-j)/2} y^{(i+j)/2} when i - j is even and to 0 otherwise.
template <typename C>
TruncSeries<C> project_q11(const GradedClass<C>& cls) {
  const int m = cls.ambient().m();
  std::vector<C> acc(q11_order(m), C(0));
  for (const auto& [p, v] : cls.terms()) {
    const int gap = p.i - p.j;
    if (gap % 2 != 0) continue;
    const int power = (p.i + p.j) / 2;
    if (power >= static_cast<int>(acc.size())) continue;
    if ((gap / 2) % 2 == 0) acc[static_cast<std::size_t>(power)] += v;
    else acc[static_cast<std::size_t>(power)] -= v;
  }
  return TruncSeries<C>(q11_order(m), std::move(acc));
}

}  // namespace grasslin
