#include "grasslin/solver/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasslin {

std::string to_string(Mode mode) { return mode == Mode::NumericOnly ? "NumericOnly" : "FullPipeline"; }

std::string to_string(Classification cls) {
  switch (cls) {
    case Classification::LinearOnly: return "LinearOnly";
    case Classification::LinearOrTwisted: return "LinearOrTwisted";
    case Classification::Inconclusive: return "Inconclusive";
    case Classification::NoConstraints: return "NoConstraints";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "numeric" || text == "NumericOnly") return Mode::NumericOnly;
  if (text == "full" || text == "FullPipeline") return Mode::FullPipeline;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

Classification parse_classification(const std::string& text) {
  for (auto c : {Classification::LinearOnly, Classification::LinearOrTwisted, Classification::Inconclusive,
                 Classification::NoConstraints}) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown classification '" + text + "'");
}

Triple chern_data(const BVFamily& family) {
  if (const auto* t = std::get_if<TensorLine>(&family)) return {2 * t->r + 1, t->r * (t->r + 1), 1};
  const auto& s = std::get<SplitLines>(family);
  return {s.r1 + s.r2, s.r1 * s.r2, 0};
}

std::string describe(const BVFamily& family) {
  if (const auto* t = std::get_if<TensorLine>(&family)) return "TensorLine r=" + std::to_string(t->r);
  const auto& s = std::get<SplitLines>(family);
  return "SplitLines r1=" + std::to_string(s.r1) + " r2=" + std::to_string(s.r2);
}

bool bv_licensed(const EmbeddingContext& ctx) { return ctx.m() >= 9 && 2 * ctx.n() <= 3 * ctx.m() - 6; }

std::vector<BVFamily> bv_families(const EmbeddingContext& ctx) {
  const long cap = ctx.m() - 4;
  std::vector<BVFamily> out;
  for (long r = 0; 2 * (2 * r + 1) < cap; ++r) out.emplace_back(TensorLine{r});
  for (long r1 = 0; 2 * r1 < cap; ++r1) {
    for (long r2 = 0; r2 <= r1 && 2 * (r1 + r2) < cap; ++r2) out.emplace_back(SplitLines{r1, r2});
  }
  return out;
}

std::optional<BVFamily> bv_member(const EmbeddingContext& ctx, const Triple& t) {
  for (const auto& f : bv_families(ctx)) {
    if (chern_data(f) == t) return f;
  }
  return std::nullopt;
}

std::vector<TripleTrace> bv_filter(const EmbeddingContext& ctx, std::vector<TripleTrace> survivors) {
  std::vector<TripleTrace> out;
  const bool licensed = bv_licensed(ctx);
  for (auto& s : survivors) {
    if (!licensed) {
      s.entries.push_back({"BV families not licensed for this (m,n)", true});
      out.push_back(std::move(s));
      continue;
    }
    if (auto f = bv_member(ctx, s.t)) {
      s.entries.push_back({"BV family " + describe(*f) + " [licensed]", true});
      out.push_back(std::move(s));
    }
  }
  return out;
}

Classification classify_survivors(const std::vector<TripleTrace>& survivors) {
  std::vector<Triple> ts;
  for (const auto& s : survivors) ts.push_back(s.t);
  std::sort(ts.begin(), ts.end());
  if (ts == std::vector<Triple>{{1, 0, 1}}) return Classification::LinearOnly;
  if (ts == std::vector<Triple>{{1, 0, 1}, {1, 1, -1}}) return Classification::LinearOrTwisted;
  return Classification::Inconclusive;
}

Verdict classify(const EmbeddingContext& ctx, Mode mode, std::optional<Box> box, unsigned jobs) {
  const Box requested = box ? *box : Box::defaults(ctx.m());
  const ConstraintSystem system = build_system(ctx);
  if (system.no_constraints) {
    requested.validate();
    return {ctx, mode, requested, Classification::NoConstraints, {}};
  }
  EnumerationResult found = enumerate(system, requested, jobs);
  std::vector<TripleTrace> survivors = std::move(found.survivors);
  if (mode == Mode::FullPipeline) {
    std::vector<TripleTrace> filtered = bv_filter(ctx, std::move(survivors));
    survivors.clear();
    for (auto& s : filtered) {
      TripleTrace final_check = check_triple(system, s.t);
      if (!final_check.pass) continue;
      final_check.entries.push_back(s.entries.back());
      survivors.push_back(std::move(final_check));
    }
  }
  const Classification cls = classify_survivors(survivors);
  return {ctx, mode, found.box, cls, std::move(survivors)};
}

int exit_code(Classification cls) {
  switch (cls) {
    case Classification::LinearOnly:
    case Classification::LinearOrTwisted: return 0;
    case Classification::Inconclusive: return 2;
    case Classification::NoConstraints: return 3;
  }
  return 2;
}

std::vector<ImpossiblePairCase> impossible_pair_cases() {
  return {
      {3, 2, 10, 13, "n <= (3m-4)/2"},
      {4, 3, 10, 13, "n <= (3m-4)/2"},
      {5, 4, 10, 13, "n <= (3m-4)/2"},
      {5, 5, 8, 9, "m >= 7"},
      {5, 6, 10, 14, "n <= (3m-2)/2"},
  };
}

BigInt integer_root_bound(const std::vector<BigInt>& coeffs) {
  std::size_t d = coeffs.size();
  while (d > 0 && is_zero(coeffs[d - 1])) --d;
  if (d == 0) throw std::invalid_argument("integer_root_bound: zero polynomial");
  // |p_d| R^d > Σ_{i<d} |p_i| R^i implies the same for every larger R.
  auto dominates = [&](const BigInt& r) {
    BigInt tail = 0;
    BigInt power = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      tail += abs(coeffs[i]) * power;
      power *= r;
    }
    return abs(coeffs[d - 1]) * power > tail;
  };
  BigInt hi = 1;
  while (!dominates(hi)) hi *= 2;
  BigInt lo = hi / 2;  // dominates(lo) is false unless lo == 0
  if (lo == 0) return BigInt(1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (dominates(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

namespace {

/// Coefficients in c of p(a, b, c) at fixed a, b, ascending.
std::vector<BigInt> in_c(const PolyABC& p, long a, long b) {
  std::vector<BigInt> out;
  for (const auto& [e, v] : p.terms()) {
    if (out.size() <= e.ec) out.resize(e.ec + 1, BigInt(0));
    BigInt pa;
    BigInt pb;
    mpz_pow_ui(pa.get_mpz_t(), BigInt(a).get_mpz_t(), e.ea);
    mpz_pow_ui(pb.get_mpz_t(), BigInt(b).get_mpz_t(), e.eb);
    out[e.ec] += v * pa * pb;
  }
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

BigInt eval_in_c(const std::vector<BigInt>& coeffs, long c) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * c + *it;
  return acc;
}

}  // namespace

ImpossiblePairReport verify_impossible_pair(const ImpossiblePairCase& pair) {
  const EmbeddingContext ctx(pair.m, pair.n);
  // The a bound is itself proved from these pairs being impossible, so it stays out.
  const ConstraintSystem system = build_system(ctx, {.include_bound = false});
  ImpossiblePairReport report{pair, true, std::nullopt, std::nullopt, std::nullopt, false, {}};
  if (auto reason = Prefilter(system).reject_ab(pair.a, pair.b)) {
    report.ab_reason = *reason;
    return report;
  }

  // Pick the equality coefficient whose integer roots in c lie in the narrowest window.
  const std::vector<Payload> payloads = materialize(system);
  std::optional<BigInt> best;
  std::vector<BigInt> best_poly;
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    if (system.constraints[i].kind != ConstraintKind::EqualityClass) continue;
    for (const auto& [p, v] : std::get<ClassPayload>(payloads[i]).value.terms()) {
      std::vector<BigInt> poly = in_c(v, pair.a, pair.b);
      if (poly.empty()) continue;
      BigInt bound = integer_root_bound(poly);
      if (!best || bound < *best) {
        best = bound;
        best_poly = std::move(poly);
        report.root_anchor = system.constraints[i].anchor;
      }
    }
  }

  std::vector<long> cs;
  if (best) {
    const long r = best->get_si() - 1;
    report.root_window = Range{std::max(-r, -pair.b), r};
    for (long c = report.root_window->lo; c <= report.root_window->hi; ++c) {
      if (is_zero(eval_in_c(best_poly, c))) cs.push_back(c);
    }
  } else {
    report.bounded_scan = true;
    report.root_window = Range{-pair.b, 4L * pair.m};
    for (long c = report.root_window->lo; c <= report.root_window->hi; ++c) cs.push_back(c);
  }
  for (long c : cs) {
    const TripleTrace tr = check_triple(system, {pair.a, pair.b, c});
    if (tr.pass) report.impossible = false;
    report.candidates.emplace_back(c, tr.pass ? std::string() : *tr.first_failure);
  }
  if (report.bounded_scan) report.impossible = false;
  return report;
}

std::vector<ImpossiblePairReport> verify_impossible_pairs() {
  std::vector<ImpossiblePairReport> out;
  for (const auto& pair : impossible_pair_cases()) out.push_back(verify_impossible_pair(pair));
  return out;
}

DerivedFacts derived_facts(const EmbeddingContext& ctx, const Triple& t) {
  if (!ctx.monomial_range()) throw std::domain_error("derived facts need 2n-2m <= m-2");
  const int m = ctx.m();
  const int n = ctx.n();
  const CNSeries<BigInt> cn = cn_total(ctx, evaluated_data(t));
  const BigInt& alpha = cn.alpha.back();
  BigInt bpow;
  mpz_pow_ui(bpow.get_mpz_t(), BigInt(t.b).get_mpz_t(), static_cast<unsigned long>(n - 2));
  const BigInt lhs = factorial(static_cast<unsigned long>(m - 2)) * factorial(static_cast<unsigned long>(m - 1)) * alpha;
  const BigInt rhs = factorial(static_cast<unsigned long>(2 * m - 4)) * bpow;
  return {t.c >= 1, t.a * t.a > 4 * t.b, lhs >= rhs};
}

bool in_linear_range(const EmbeddingContext& ctx) { return 2 * ctx.n() <= 3 * ctx.m() - 6; }

}  // namespace grasslin
