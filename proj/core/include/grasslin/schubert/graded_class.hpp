#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "grasslin/ring/bigint.hpp"
#include "grasslin/ring/poly_abc.hpp"
#include "grasslin/schubert/partition.hpp"

namespace grasslin {

/// A cohomology class of Gr(2, m) in the Schubert basis, with coefficients in C.
///
/// Keys outside the box of the ambient are zero and never stored, nor are zero
/// coefficients. Degrees are mixed in general; piece(k) extracts H^{2k}.
template <typename C>
class GradedClass {
 public:
  using TermMap = std::map<Partition2, C>;

  explicit GradedClass(Ambient ambient) : ambient_(ambient) {}

  static GradedClass one(Ambient ambient) { return cycle(ambient, {0, 0}); }
  static GradedClass cycle(Ambient ambient, Partition2 p, const C& coeff = C(1)) {
    GradedClass out(ambient);
    out.add_term(p, coeff);
    return out;
  }

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(Partition2 p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Adds coeff * ω_p; a no-op when p lies outside the box.
  void add_term(Partition2 p, const C& coeff) {
    if (!ambient_.contains(p) || grasslin::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (grasslin::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// The homogeneous component in H^{2k}.
  GradedClass piece(int k) const {
    GradedClass out(ambient_);
    for (const auto& [p, v] : terms_) {
      if (p.degree() == k) out.terms_.emplace(p, v);
    }
    return out;
  }

  /// Degree when every term has the same degree; nullopt for zero or mixed classes.
  std::optional<int> pure_degree() const {
    std::optional<int> deg;
    for (const auto& [p, _] : terms_) {
      if (deg && *deg != p.degree()) return std::nullopt;
      deg = p.degree();
    }
    return deg;
  }

  int max_degree() const {
    int deg = -1;
    for (const auto& [p, _] : terms_) deg = std::max(deg, p.degree());
    return deg;
  }

  GradedClass& operator+=(const GradedClass& rhs) {
    require_same_ambient(rhs);
    for (const auto& [p, v] : rhs.terms_) add_term(p, v);
    return *this;
  }
  GradedClass& operator-=(const GradedClass& rhs) {
    require_same_ambient(rhs);
    for (const auto& [p, v] : rhs.terms_) add_term(p, -v);
    return *this;
  }
  friend GradedClass operator+(GradedClass lhs, const GradedClass& rhs) { return lhs += rhs; }
  friend GradedClass operator-(GradedClass lhs, const GradedClass& rhs) { return lhs -= rhs; }
  GradedClass operator-() const {
    GradedClass out(ambient_);
    for (const auto& [p, v] : terms_) out.terms_.emplace(p, -v);
    return out;
  }
  friend GradedClass operator*(const C& s, const GradedClass& rhs) {
    GradedClass out(rhs.ambient_);
    if (grasslin::is_zero(s)) return out;
    for (const auto& [p, v] : rhs.terms_) out.add_term(p, s * v);
    return out;
  }

  friend bool operator==(const GradedClass&, const GradedClass&) = default;

  /// Applies f to every coefficient, producing a class over f's result type.
  template <typename F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    GradedClass<D> out(ambient_);
    for (const auto& [p, v] : terms_) out.add_term(p, f(v));
    return out;
  }

  void require_same_ambient(const GradedClass& rhs) const {
    if (!(ambient_ == rhs.ambient_)) {
      std::ostringstream os;
      os << "ambient mismatch: " << ambient_ << " vs " << rhs.ambient_;
      throw std::invalid_argument(os.str());
    }
  }

 private:
  Ambient ambient_;
  TermMap terms_;
};

using SchubertClass = GradedClass<BigInt>;
using SymClass = GradedClass<PolyABC>;

template <typename C>
std::ostream& operator<<(std::ostream& os, const GradedClass<C>& cls) {
  if (cls.is_zero()) return os << '0';
  bool first = true;
  // Descending (i, j) reads like the usual leading-term-first notation.
  for (auto it = cls.terms().rbegin(); it != cls.terms().rend(); ++it) {
    const auto& [p, v] = *it;
    if constexpr (std::is_same_v<C, BigInt>) {
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << '-';
      BigInt mag = abs(v);
      if (mag != 1) os << mag.get_str() << '*';
    } else {
      if (!first) os << " + ";
      os << '(' << v << ")*";
    }
    first = false;
    os << p;
  }
  return os;
}

/// Evaluates the coefficients of a symbolic class at an integer point.
SchubertClass evaluate(const SymClass& cls, const Triple& t);

/// Embeds an integer class as a symbolic one with constant coefficients.
SymClass to_symbolic(const SchubertClass& cls);

}  // namespace grasslin
