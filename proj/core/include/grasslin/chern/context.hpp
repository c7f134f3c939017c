#pragma once

#include <ostream>

#include "grasslin/ring/bigint.hpp"
#include "grasslin/ring/poly_abc.hpp"
#include "grasslin/schubert/partition.hpp"

namespace grasslin {

/// A hypothetical embedding Gr(2, m) -> Gr(2, n), n >= m >= 4.
class EmbeddingContext {
 public:
  /// Throws std::invalid_argument unless n >= m >= 4.
  EmbeddingContext(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// Rank 2n - 2m of the normal bundle.
  int normal_rank() const { return 2 * n_ - 2 * m_; }
  /// Complex dimension 2m - 4 of the source.
  int top_degree() const { return 2 * m_ - 4; }
  Ambient source() const { return Ambient::of(m_); }

  /// 2n - 2m <= 2m - 4: the rank of N leaves room for vanishing and Euler constraints.
  bool has_constraints() const { return normal_rank() <= top_degree(); }
  /// 2n - 2m <= m - 2: monomial coordinates of c_k(N), k <= 2n - 2m, are unique.
  bool monomial_range() const { return normal_rank() <= m_ - 2; }

  friend bool operator==(const EmbeddingContext&, const EmbeddingContext&) = default;

 private:
  int m_;
  int n_;
};

std::ostream& operator<<(std::ostream& os, const EmbeddingContext& ctx);

/// Chern data of E = φ*(Ě(2,n)): c_1(E) = a ω_{1,0}, c_2(E) = b ω_{1,0}^2 + c ω_{1,1}.
///
/// C = PolyABC gives the symbolic engine (a, b, c are the formal variables);
/// C = BigInt gives the evaluated engine for one integer triple.
template <typename C>
struct ChernData {
  C a;
  C b;
  C c;
};

inline ChernData<PolyABC> symbolic_data() { return {PolyABC::a(), PolyABC::b(), PolyABC::c()}; }
inline ChernData<BigInt> evaluated_data(const Triple& t) { return {BigInt(t.a), BigInt(t.b), BigInt(t.c)}; }

}  // namespace grasslin
