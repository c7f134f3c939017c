#include "grasslin/solver/constraints.hpp"

#include <algorithm>

namespace grasslin {

namespace {

std::string k_str(int k) { return std::to_string(k); }

template <typename C>
bool all_nonneg(const GradedClass<C>& cls) {
  return std::all_of(cls.terms().begin(), cls.terms().end(), [](const auto& kv) { return sgn(kv.second) >= 0; });
}

BigInt div12_value(const Triple& t) {
  const BigInt a(t.a);
  const BigInt b(t.b);
  return a * b * (a * a - b + 3);
}

PolyABC div12_poly() {
  const PolyABC a = PolyABC::a();
  const PolyABC b = PolyABC::b();
  return a * b * (a * a - b + PolyABC(3));
}

}  // namespace

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::EqualityClass: return "EqualityClass";
    case ConstraintKind::InequalityPoly: return "InequalityPoly";
    case ConstraintKind::Divisibility: return "Divisibility";
    case ConstraintKind::BoundPredicate: return "BoundPredicate";
  }
  return "?";
}

bool ConstraintSystem::has(Quantity q) const {
  return std::any_of(constraints.begin(), constraints.end(), [q](const Constraint& c) { return c.quantity == q; });
}

ConstraintSystem build_system(const EmbeddingContext& ctx, SystemOptions options) {
  ConstraintSystem sys{ctx, {}, false};
  const int m = ctx.m();
  const int n = ctx.n();
  const int rho = ctx.normal_rank();
  const int top = ctx.top_degree();
  if (rho > top) {
    sys.no_constraints = true;
    return sys;
  }
  auto& out = sys.constraints;

  for (int k = rho + 1; k <= top; ++k) {
    out.push_back({ConstraintKind::EqualityClass, Quantity::NormalVanishing, k, "E1 vanishing c_" + k_str(k) + "(N)=0",
                   "2n-2m < k <= 2m-4"});
  }
  out.push_back({ConstraintKind::EqualityClass, Quantity::EulerEquality, rho,
                 "E2 euler c_" + k_str(rho) + "(N)=e(N)", "2n-2m <= 2m-4"});

  for (int k = 1; k <= 2; ++k) {
    out.push_back({ConstraintKind::InequalityPoly, Quantity::BundleNonneg, k, "I1 nonneg c_" + k_str(k) + "(E)",
                   "always"});
  }
  for (int k = 1; k <= std::min(n - 2, top); ++k) {
    out.push_back({ConstraintKind::InequalityPoly, Quantity::QuotientNonneg, k,
                   "I1 nonneg pullback w_{" + k_str(k) + ",0}", "k <= min(n-2, 2m-4)"});
  }
  for (int k = 1; k <= rho; ++k) {
    out.push_back({ConstraintKind::InequalityPoly, Quantity::NormalNonneg, k, "I1 nonneg c_" + k_str(k) + "(N)",
                   "k <= 2n-2m"});
  }
  for (int i = 0; i <= n - m; ++i) {
    out.push_back({ConstraintKind::InequalityPoly, Quantity::IntersectionNonneg, i,
                   "I2 intersection d_" + k_str(i) + ">=0", "always"});
  }
  if (m >= 7) {
    out.push_back({ConstraintKind::Divisibility, Quantity::Divisibility12, 0, "D1 div12 12|ab(a^2-b+3)", "m >= 7"});
  }
  if (options.include_bound && m >= 9 && 2 * n <= 3 * m - 6) {
    out.push_back({ConstraintKind::BoundPredicate, Quantity::LinearBound, 0, "B1 bound 2a<=m-5 [licensed]",
                   "m >= 9 and 2n <= 3m-6", true});
  }
  return sys;
}

std::vector<Payload> materialize(const ConstraintSystem& system) {
  std::vector<Payload> out;
  if (system.constraints.empty()) return out;
  const EmbeddingContext& ctx = system.ctx;
  const auto data = symbolic_data();
  const CNSeries<PolyABC> cn = cn_total(ctx, data);
  const Pullback<PolyABC> pb(ctx, data);
  const EulerData<PolyABC> eu = euler_class(pb);
  const SymClass bundle = chern_E(ctx.source(), data);

  for (const Constraint& c : system.constraints) {
    const auto k = static_cast<std::size_t>(c.index);
    switch (c.quantity) {
      case Quantity::NormalVanishing: out.emplace_back(ClassPayload{cn.gamma[k]}); break;
      case Quantity::EulerEquality: out.emplace_back(ClassPayload{cn.gamma[k] - eu.e}); break;
      case Quantity::BundleNonneg: out.emplace_back(ClassPayload{bundle.piece(c.index)}); break;
      case Quantity::QuotientNonneg: out.emplace_back(ClassPayload{pb.special(c.index)}); break;
      case Quantity::NormalNonneg: out.emplace_back(ClassPayload{cn.gamma[k]}); break;
      case Quantity::IntersectionNonneg: out.emplace_back(PolyPayload{eu.d[k]}); break;
      case Quantity::Divisibility12: out.emplace_back(DivisibilityPayload{BigInt(12), div12_poly()}); break;
      case Quantity::LinearBound: out.emplace_back(BoundPayload{BigInt(2), BigInt(ctx.m() - 5)}); break;
    }
  }
  return out;
}

bool payload_holds(const Constraint& c, const Payload& payload, const Triple& t) {
  return std::visit(
      [&](const auto& p) -> bool {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PolyPayload>) {
          return sgn(p.value.evaluate(t)) >= 0;
        } else if constexpr (std::is_same_v<P, DivisibilityPayload>) {
          return mpz_divisible_p(p.value.evaluate(t).get_mpz_t(), p.modulus.get_mpz_t()) != 0;
        } else if constexpr (std::is_same_v<P, BoundPayload>) {
          return p.scale * t.a <= p.limit;
        } else {
          const SchubertClass v = evaluate(p.value, t);
          return c.kind == ConstraintKind::EqualityClass ? v.is_zero() : all_nonneg(v);
        }
      },
      payload);
}

TripleState::TripleState(const EmbeddingContext& ctx, const Triple& t) : ctx_(ctx), t_(t) {}

const CNSeries<BigInt>& TripleState::cn() {
  if (!cn_) cn_ = cn_total(ctx_, evaluated_data(t_));
  return *cn_;
}

const Pullback<BigInt>& TripleState::pullback() {
  if (!pb_) pb_.emplace(ctx_, evaluated_data(t_));
  return *pb_;
}

const EulerData<BigInt>& TripleState::euler() {
  if (!euler_) euler_ = euler_class(pullback());
  return *euler_;
}

const SchubertClass& TripleState::bundle() {
  if (!bundle_) bundle_ = chern_E(ctx_.source(), evaluated_data(t_));
  return *bundle_;
}

bool holds(const Constraint& c, TripleState& st) {
  const auto k = static_cast<std::size_t>(c.index);
  switch (c.quantity) {
    case Quantity::NormalVanishing: return st.cn().gamma[k].is_zero();
    case Quantity::EulerEquality: return st.cn().gamma[k] == st.euler().e;
    case Quantity::BundleNonneg: return all_nonneg(st.bundle().piece(c.index));
    case Quantity::QuotientNonneg: return all_nonneg(st.pullback().special(c.index));
    case Quantity::NormalNonneg: return all_nonneg(st.cn().gamma[k]);
    case Quantity::IntersectionNonneg: return sgn(st.euler().d[k]) >= 0;
    case Quantity::Divisibility12: return mpz_divisible_ui_p(div12_value(st.triple()).get_mpz_t(), 12) != 0;
    case Quantity::LinearBound: return 2 * st.triple().a <= st.context().m() - 5;
  }
  return false;
}

TripleTrace check_triple(const ConstraintSystem& system, const Triple& t) {
  TripleTrace trace{t, {}, true, std::nullopt};
  TripleState st(system.ctx, t);
  for (const Constraint& c : system.constraints) {
    const bool ok = holds(c, st);
    trace.entries.push_back({c.anchor, ok});
    if (!ok && trace.pass) {
      trace.pass = false;
      trace.first_failure = c.anchor;
    }
  }
  return trace;
}

bool passes(const ConstraintSystem& system, const Triple& t) {
  TripleState st(system.ctx, t);
  // Constraints that need no Chern computation go first.
  auto cheap = [](Quantity q) {
    return q == Quantity::Divisibility12 || q == Quantity::BundleNonneg || q == Quantity::LinearBound;
  };
  for (const Constraint& c : system.constraints) {
    if (cheap(c.quantity) && !holds(c, st)) return false;
  }
  for (const Constraint& c : system.constraints) {
    if (!cheap(c.quantity) && !holds(c, st)) return false;
  }
  return true;
}

}  // namespace grasslin
