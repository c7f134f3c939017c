#include "grasslin/ring/poly_abc.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace grasslin {

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '(' << t.a << ',' << t.b << ',' << t.c << ')';
}

PolyABC::PolyABC(long constant) {
  if (constant != 0) terms_.emplace(Exponent{}, BigInt(constant));
}

PolyABC::PolyABC(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

PolyABC PolyABC::monomial(Exponent e, const BigInt& coeff) {
  PolyABC p;
  p.add_term(e, coeff);
  return p;
}

bool PolyABC::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

BigInt PolyABC::constant_term() const { return coeff(Exponent{}); }

BigInt PolyABC::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t PolyABC::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, _] : terms_) d = std::max(d, e.total());
  return d;
}

void PolyABC::add_term(const Exponent& e, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyABC& PolyABC::operator+=(const PolyABC& rhs) {
  for (const auto& [e, v] : rhs.terms_) add_term(e, v);
  return *this;
}

PolyABC& PolyABC::operator-=(const PolyABC& rhs) {
  for (const auto& [e, v] : rhs.terms_) add_term(e, -v);
  return *this;
}

PolyABC operator*(const PolyABC& lhs, const PolyABC& rhs) {
  PolyABC out;
  for (const auto& [e1, v1] : lhs.terms_) {
    for (const auto& [e2, v2] : rhs.terms_) {
      out.add_term({e1.ea + e2.ea, e1.eb + e2.eb, e1.ec + e2.ec}, v1 * v2);
    }
  }
  return out;
}

PolyABC& PolyABC::operator*=(const PolyABC& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyABC& PolyABC::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= scalar;
  return *this;
}

PolyABC PolyABC::operator-() const {
  PolyABC out = *this;
  for (auto& [_, v] : out.terms_) v = -v;
  return out;
}

PolyABC PolyABC::pow(unsigned exponent) const {
  PolyABC result(1);
  PolyABC base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

namespace {

// Powers cache for evaluation and substitution.
template <typename T>
const T& cached_power(std::vector<T>& cache, std::uint32_t k) {
  while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
  return cache[k];
}

}  // namespace

BigInt PolyABC::evaluate(const BigInt& a, const BigInt& b, const BigInt& c) const {
  std::vector<BigInt> pa{1, a}, pb{1, b}, pc{1, c};
  BigInt sum = 0;
  for (const auto& [e, v] : terms_) {
    sum += v * cached_power(pa, e.ea) * cached_power(pb, e.eb) * cached_power(pc, e.ec);
  }
  return sum;
}

PolyABC PolyABC::substitute(const PolyABC& a, const PolyABC& b, const PolyABC& c) const {
  std::vector<PolyABC> pa{PolyABC(1), a}, pb{PolyABC(1), b}, pc{PolyABC(1), c};
  PolyABC sum;
  for (const auto& [e, v] : terms_) {
    sum += cached_power(pa, e.ea) * cached_power(pb, e.eb) * cached_power(pc, e.ec) * v;
  }
  return sum;
}

std::string PolyABC::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, v] = *it;
    BigInt mag = abs(v);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.total() != 0;
    bool need_star = false;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    const std::array<std::pair<char, std::uint32_t>, 3> vars{{{'a', e.ea}, {'b', e.eb}, {'c', e.ec}}};
    for (const auto& [name, power] : vars) {
      if (power == 0) continue;
      if (need_star) os << '*';
      os << name;
      if (power > 1) os << '^' << power;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyABC& p) { return os << p.to_string(); }

bool is_unit(const PolyABC& value) { return value.is_constant() && is_unit(value.constant_term()); }

}  // namespace grasslin
