#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grasslin/chern/context.hpp"
#include "grasslin/ring/trunc_series.hpp"
#include "grasslin/schubert/gr2.hpp"
#include "grasslin/schubert/pieri.hpp"

namespace grasslin {

/// c(E) = 1 + a ω_{1,0} + b ω_{2,0} + (b+c) ω_{1,1}.
template <typename C>
GradedClass<C> chern_E(const Ambient& amb, const ChernData<C>& t) {
  GradedClass<C> out = GradedClass<C>::one(amb);
  out.add_term({1, 0}, t.a);
  out.add_term({2, 0}, t.b);
  out.add_term({1, 1}, t.b + t.c);
  return out;
}

inline SymClass chern_E(int m) { return chern_E(Ambient::of(m), symbolic_data()); }

/// The four total Chern classes entering the normal-bundle equation.
template <typename C>
struct ChernFactors {
  GradedClass<C> bundle;          // c(E)
  GradedClass<C> endomorphism;    // c(Ě ⊗ E) = 1 + (4b - a^2) ω_{1,0}^2 + 4c ω_{1,1}
  GradedClass<C> dual_universal;  // c(Ě(2,m)) = 1 + ω_{1,0} + ω_{1,1}
  GradedClass<C> universal_endo;  // c(E(2,m) ⊗ Ě(2,m)) = 1 - ω_{1,0}^2 + 4 ω_{1,1}
};

template <typename C>
ChernFactors<C> chern_factors(const Ambient& amb, const ChernData<C>& t) {
  const C disc = C(4) * t.b - t.a * t.a;
  GradedClass<C> endo = GradedClass<C>::one(amb);
  endo.add_term({2, 0}, disc);
  endo.add_term({1, 1}, disc + C(4) * t.c);

  GradedClass<C> dual = GradedClass<C>::one(amb);
  dual.add_term({1, 0}, C(1));
  dual.add_term({1, 1}, C(1));

  GradedClass<C> uendo = GradedClass<C>::one(amb);
  uendo.add_term({2, 0}, C(-1));
  uendo.add_term({1, 1}, C(3));

  return {chern_E(amb, t), std::move(endo), std::move(dual), std::move(uendo)};
}

inline ChernFactors<PolyABC> chern_factors(int m) { return chern_factors(Ambient::of(m), symbolic_data()); }

/// Total Chern class of the universal bundle E(d, m): 1 + Σ_k (-1)^k ω_{1^k}.
GeneralClass chern_universal(int d, int m);
/// Total Chern class of the quotient bundle Q(d, m): 1 + Σ_{k=1}^{m-d} ω_{k,0,...,0}.
GeneralClass chern_quotient(int d, int m);

/// Pullbacks φ*(ω̃_{p,q}) of target Schubert cycles along an embedding with
/// the given Chern data.
///
/// ω̃_{s,0} = ω̃_{1,0} ω̃_{s-1,0} - ω̃_{1,1} ω̃_{s-2,0} on Gr(2, n) for s <= n - 2,
/// with φ*(ω̃_{1,0}) = a ω_{1,0} and φ*(ω̃_{1,1}) = b ω_{1,0}^2 + c ω_{1,1};
/// then ω̃_{p,q} = ω̃_{p-q,0} ω̃_{1,1}^q.
template <typename C>
class Pullback {
 public:
  Pullback(const EmbeddingContext& ctx, const ChernData<C>& data) : ctx_(ctx), data_(data) {
    const Ambient amb = ctx.source();
    const int limit = ctx.n() - 2;
    GradedClass<C> lin(amb);
    lin.add_term({1, 0}, data.a);
    GradedClass<C> quad(amb);
    quad.add_term({2, 0}, data.b);
    quad.add_term({1, 1}, data.b + data.c);

    specials_.reserve(static_cast<std::size_t>(limit + 1));
    specials_.push_back(GradedClass<C>::one(amb));
    for (int s = 1; s <= limit; ++s) {
      GradedClass<C> next = mul2(lin, specials_.back());
      if (s >= 2) next -= mul2(quad, specials_[static_cast<std::size_t>(s - 2)]);
      specials_.push_back(std::move(next));
    }

    quad_powers_.reserve(static_cast<std::size_t>(limit + 1));
    quad_powers_.push_back(GradedClass<C>::one(amb));
    for (int q = 1; q <= limit; ++q) {
      if (quad_powers_.back().is_zero()) quad_powers_.emplace_back(amb);
      else quad_powers_.push_back(mul2(quad_powers_.back(), quad));
    }
  }

  const EmbeddingContext& context() const { return ctx_; }
  const ChernData<C>& data() const { return data_; }

  /// φ*(ω̃_{s,0}) for 0 <= s <= n - 2.
  const GradedClass<C>& special(int s) const {
    if (s < 0 || s > ctx_.n() - 2) throw std::out_of_range("special cycle index outside [0, n-2]");
    return specials_[static_cast<std::size_t>(s)];
  }

  /// φ*(ω̃_{p,q}); throws std::out_of_range outside the (n-2)-box of the target.
  GradedClass<C> cycle(Partition2 p) const {
    if (!Ambient::of(ctx_.n()).contains(p)) {
      throw std::out_of_range("target cycle (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                              ") outside the box of Gr(2," + std::to_string(ctx_.n()) + ")");
    }
    const auto& base = specials_[static_cast<std::size_t>(p.i - p.j)];
    const auto& quad = quad_powers_[static_cast<std::size_t>(p.j)];
    if (p.j == 0) return base;
    return mul2(base, quad);
  }

 private:
  EmbeddingContext ctx_;
  ChernData<C> data_;
  std::vector<GradedClass<C>> specials_;
  std::vector<GradedClass<C>> quad_powers_;
};

/// Euler class of the normal bundle, assembled from intersection numbers.
template <typename C>
struct EulerData {
  /// d_i = deg φ*(ω̃_{n-2-i, 2m-n-2+i}), i = 0..n-m; zero when the cycle is not a partition.
  std::vector<C> d;
  /// e = Σ d_i φ*(ω̃_{2n-2m-i, i}).
  GradedClass<C> e;
  /// γ_i = ω_{2n-2m-2i,0}-coefficient of φ*(ω̃_{2n-2m-2i,0}); zero past the box.
  std::vector<C> gamma;
};

template <typename C>
EulerData<C> euler_class(const Pullback<C>& pb) {
  const EmbeddingContext& ctx = pb.context();
  const int m = ctx.m();
  const int n = ctx.n();
  const int rho = ctx.normal_rank();
  const Ambient target = Ambient::of(n);

  EulerData<C> out{{}, GradedClass<C>(ctx.source()), {}};
  for (int i = 0; i <= n - m; ++i) {
    const Partition2 dual{n - 2 - i, 2 * m - n - 2 + i};
    C di(0);
    if (dual.j >= 0 && target.contains(dual)) di = top_value(pb.cycle(dual));
    if (!grasslin::is_zero(di)) {
      const Partition2 cyc{rho - i, i};
      if (cyc.i >= cyc.j && target.contains(cyc)) out.e += di * pb.cycle(cyc);
    }
    out.d.push_back(std::move(di));

    const int s = rho - 2 * i;
    C gi(0);
    if (s >= 0 && s <= n - 2) gi = pb.special(s).coeff({s, 0});
    out.gamma.push_back(std::move(gi));
  }
  return out;
}

/// Total Chern class of the normal bundle solved degree by degree from
/// c(N) c(Ě⊗E) c(Ě(2,m))^m = c(E)^n c(E(2,m)⊗Ě(2,m)).
template <typename C>
struct CNSeries {
  EmbeddingContext ctx;
  /// gamma[k] = c_k(N), k = 0..2m-4.
  std::vector<GradedClass<C>> gamma;
  /// ω_{1,0}^k-coordinate of c_k(N), k <= min(2n-2m, m-2).
  std::vector<C> alpha;
  /// Last monomial coordinate of c_k(N) (ω_{1,1}^{k/2} or ω_{1,0} ω_{1,1}^{(k-1)/2}), same range.
  std::vector<C> beta;

  GradedClass<C> total() const {
    GradedClass<C> out(ctx.source());
    for (const auto& g : gamma) out += g;
    return out;
  }
};

/// The two sides of the normal-bundle equation, before solving.
template <typename C>
struct NormalEquation {
  GradedClass<C> multiplier;  // c(Ě⊗E) c(Ě(2,m))^m
  GradedClass<C> rhs;         // c(E)^n c(E(2,m)⊗Ě(2,m))
};

template <typename C>
NormalEquation<C> normal_equation(const EmbeddingContext& ctx, const ChernData<C>& t) {
  const auto f = chern_factors(ctx.source(), t);
  return {mul2(f.endomorphism, pow(f.dual_universal, static_cast<unsigned>(ctx.m()))),
          mul2(pow(f.bundle, static_cast<unsigned>(ctx.n())), f.universal_endo)};
}

template <typename C>
CNSeries<C> cn_total(const EmbeddingContext& ctx, const ChernData<C>& t) {
  const NormalEquation<C> eq = normal_equation(ctx, t);
  const int top = ctx.top_degree();
  std::vector<GradedClass<C>> mpieces;
  std::vector<GradedClass<C>> rpieces;
  for (int k = 0; k <= top; ++k) {
    mpieces.push_back(eq.multiplier.piece(k));
    rpieces.push_back(eq.rhs.piece(k));
  }

  // The multiplier has constant term 1, so forward substitution is exact.
  CNSeries<C> out{ctx, {}, {}, {}};
  out.gamma.reserve(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    GradedClass<C> g = rpieces[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) {
      const auto& mk = mpieces[static_cast<std::size_t>(k - i)];
      if (mk.is_zero() || out.gamma[static_cast<std::size_t>(i)].is_zero()) continue;
      g -= mul2(out.gamma[static_cast<std::size_t>(i)], mk);
    }
    out.gamma.push_back(std::move(g));
  }

  const int reach = std::min(ctx.normal_rank(), ctx.m() - 2);
  for (int k = 0; k <= reach; ++k) {
    const auto coords = to_monomial(ctx.m(), out.gamma[static_cast<std::size_t>(k)], k);
    out.alpha.push_back(coords.front());
    out.beta.push_back(coords.back());
  }
  return out;
}

inline CNSeries<PolyABC> cn_total(const EmbeddingContext& ctx) { return cn_total(ctx, symbolic_data()); }

/// One side-by-side identity in a quotient ring.
template <typename C>
struct RefinedEquation {
  TruncSeries<C> lhs;
  TruncSeries<C> rhs;
  /// Coefficients from this index on vanish on solutions of the vanishing constraints.
  std::size_t vanishing_from;
};

namespace detail {

inline void require_refined_range(const EmbeddingContext& ctx) {
  if (2 * ctx.n() > 3 * ctx.m() - 2) {
    throw std::domain_error("refined equations need n <= (3m-2)/2");
  }
}

/// ω_{1,0}^k-coordinate of c_k(N) for every k <= m - 2, read off the ω_{k,0} coefficient.
template <typename C>
std::vector<C> alpha_coordinates(const CNSeries<C>& cn) {
  std::vector<C> out;
  for (int k = 0; k <= cn.ctx.m() - 2; ++k) out.push_back(cn.gamma[static_cast<std::size_t>(k)].coeff({k, 0}));
  return out;
}

/// ω_{1,1}^k-coordinate of c_{2k}(N) for every 2k <= m - 2.
template <typename C>
std::vector<C> beta_coordinates(const CNSeries<C>& cn) {
  std::vector<C> out;
  for (int k = 0; 2 * k <= cn.ctx.m() - 2; ++k) {
    out.push_back(to_monomial(cn.ctx.m(), cn.gamma[static_cast<std::size_t>(2 * k)], 2 * k).back());
  }
  return out;
}

}  // namespace detail

/// (Σ α_k x^k)(1 + (4b-a^2)x^2)(1+x)^{m-1} = (1 + ax + bx^2)^n (1-x) in Z[x]/(x^{m-1}).
///
/// α runs over every k <= m - 2, so the identity holds for any Chern data;
/// truncating α at k = 2n - 2m changes only coefficients past that index.
template <typename C>
RefinedEquation<C> refined_eq_10(const CNSeries<C>& cn, const ChernData<C>& t) {
  detail::require_refined_range(cn.ctx);
  const std::size_t ord = q10_order(cn.ctx.m());
  using S = TruncSeries<C>;
  const S alpha(ord, detail::alpha_coordinates(cn));
  const S endo(ord, {C(1), C(0), C(4) * t.b - t.a * t.a});
  const S lhs = alpha * endo * S(ord, {C(1), C(1)}).pow(static_cast<unsigned>(cn.ctx.m() - 1));
  const S rhs = S(ord, {C(1), t.a, t.b}).pow(static_cast<unsigned>(cn.ctx.n())) * S(ord, {C(1), C(-1)});
  return {lhs, rhs, static_cast<std::size_t>(cn.ctx.normal_rank() + 1)};
}

/// (Σ β_{2k} y^k)(1 + 4cy)(1+y)^m = (1 + cy)^n (1 + 4y) in Z[y]/(y^{⌊(m-2)/2⌋+1}).
template <typename C>
RefinedEquation<C> refined_eq_11(const CNSeries<C>& cn, const ChernData<C>& t) {
  detail::require_refined_range(cn.ctx);
  const std::size_t ord = q11_order(cn.ctx.m());
  using S = TruncSeries<C>;
  const S beta(ord, detail::beta_coordinates(cn));
  const S lhs = beta * S(ord, {C(1), C(4) * t.c}) * S(ord, {C(1), C(1)}).pow(static_cast<unsigned>(cn.ctx.m()));
  const S rhs = S(ord, {C(1), t.c}).pow(static_cast<unsigned>(cn.ctx.n())) * S(ord, {C(1), C(4)});
  return {lhs, rhs, static_cast<std::size_t>(cn.ctx.n() - cn.ctx.m() + 1)};
}

inline RefinedEquation<PolyABC> refined_eq_10(const EmbeddingContext& ctx) {
  return refined_eq_10(cn_total(ctx), symbolic_data());
}
inline RefinedEquation<PolyABC> refined_eq_11(const EmbeddingContext& ctx) {
  return refined_eq_11(cn_total(ctx), symbolic_data());
}

}  // namespace grasslin
