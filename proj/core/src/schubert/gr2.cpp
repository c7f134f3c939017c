#include "grasslin/schubert/gr2.hpp"

namespace grasslin {

namespace {

void require_in_box(int m, Partition2 p) {
  if (!Ambient::of(m).contains(p)) {
    throw std::out_of_range("partition (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                            ") lies outside the box of Gr(2," + std::to_string(m) + ")");
  }
}

}  // namespace

Partition2 dual_cycle(int m, Partition2 p) {
  require_in_box(m, p);
  return {m - 2 - p.j, m - 2 - p.i};
}

BigInt degree_of(int m, Partition2 p) {
  require_in_box(m, p);
  const auto i = static_cast<unsigned long>(p.i);
  const auto j = static_cast<unsigned long>(p.j);
  const auto mm = static_cast<unsigned long>(m);
  BigInt num = factorial(2 * mm - 4 - i - j) * (i - j + 1);
  BigInt den = factorial(mm - 2 - i) * factorial(mm - 1 - j);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

SchubertClass monomial_class(const Ambient& ambient, int k, int i) {
  if (i < 0 || 2 * i > k) throw std::invalid_argument("monomial_class: need 0 <= 2i <= k");
  const SchubertClass w10 = SchubertClass::cycle(ambient, {1, 0});
  const SchubertClass w11 = SchubertClass::cycle(ambient, {1, 1});
  return mul2(pow(w10, static_cast<unsigned>(k - 2 * i)), pow(w11, static_cast<unsigned>(i)));
}

SchubertClass evaluate(const SymClass& cls, const Triple& t) {
  return cls.map_coeffs([&](const PolyABC& p) { return p.evaluate(t); });
}

SymClass to_symbolic(const SchubertClass& cls) {
  return cls.map_coeffs([](const BigInt& v) { return PolyABC(v); });
}

}  // namespace grasslin
