// Acceptance suite: one pass/fail line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grasslin/chern/engine.hpp"
#include "grasslin/solver/classify.hpp"
#include "random_inputs.hpp"

using namespace grasslin;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string str(const auto& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string survivors_text(const std::vector<TripleTrace>& survivors) {
  std::string out = "{";
  for (std::size_t i = 0; i < survivors.size(); ++i) out += (i ? "," : "") + str(survivors[i].t);
  return out + "}";
}

int failures = 0;

/// Runs body, then prints the verdict line. A positive limit_ms also gates the result.
void criterion(int id, const std::string& title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double took = ms_since(start);
  if (limit_ms > 0 && took >= limit_ms && out.ok) {
    out.ok = false;
    out.detail = "over time limit";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d %s  %s  [%.3f ms%s]%s%s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(), took,
              limit_ms > 0 ? (", limit " + str(limit_ms) + " ms").c_str() : "", out.detail.empty() ? "" : "  ",
              out.detail.c_str());
  std::fflush(stdout);
}

SchubertClass ws(int i, int j) { return SchubertClass::cycle(Ambient::stable(), {i, j}); }
SchubertClass w(int m, int i, int j) { return SchubertClass::cycle(Ambient::of(m), {i, j}); }

/// Survivor lists from the classification criteria, reused by the derived-fact check.
std::vector<std::pair<EmbeddingContext, std::vector<TripleTrace>>> survivor_lists;

void check_classification(Outcome& out, int m, int n, const std::vector<Triple>& expected) {
  const EmbeddingContext ctx(m, n);
  const Verdict v = classify(ctx, Mode::FullPipeline);
  std::vector<Triple> got;
  for (const auto& s : v.survivors) got.push_back(s.t);
  out.require(got == expected, "(" + str(m) + "," + str(n) + ") survivors " + survivors_text(v.survivors));
  survivor_lists.emplace_back(ctx, v.survivors);
}

}  // namespace

int main() {
  criterion(1, "stable product w_{8,5} w_{7,3}", 1.0, [](Outcome& out) {
    const SchubertClass got = mul2(ws(8, 5), ws(7, 3));
    out.require(got == ws(15, 8) + ws(14, 9) + ws(13, 10) + ws(12, 11), "got " + str(got));
  });

  criterion(2, "degree closed form vs repeated Pieri, m in [4,12]", 5000.0, [](Outcome& out) {
    for (int m = 4; m <= 12; ++m) {
      for (int i = 0; i <= m - 2; ++i) {
        for (int j = 0; j <= i; ++j) {
          GeneralClass cls = to_general(w(m, i, j));
          for (int k = i + j; k < 2 * m - 4; ++k) cls = pieri_special(2, m, cls, 1);
          const BigInt brute = pairing(m, from_general(m, cls), w(m, 0, 0));
          out.require(degree_of(m, {i, j}) == brute, "m=" + str(m) + " (" + str(i) + "," + str(j) + ")");
        }
      }
      const auto k = static_cast<unsigned long>(m - 2);
      out.require(degree_of(m, {0, 0}) == binomial(2 * k, k) / (k + 1), "Catalan at m=" + str(m));
    }
    out.require(top_value(pow(w(4, 1, 0), 4)) == 2, "w_{1,0}^4 at m=4");
  });

  criterion(3, "symbolic c_1(N), c_2(N) identities", 0.0, [](Outcome& out) {
    const PolyABC a = PolyABC::a();
    const PolyABC b = PolyABC::b();
    const PolyABC c = PolyABC::c();
    for (int m = 4; m <= 12; ++m) {
      for (int n = m; n <= m + 3; ++n) {
        const auto cn = cn_total(EmbeddingContext(m, n));
        const PolyABC g1 = a * PolyABC(n) - PolyABC(m);
        out.require(cn.gamma[1] == SymClass::cycle(Ambient::of(m), {1, 0}, g1), "Gamma_1 at " + str(m) + "," + str(n));
        const PolyABC x2 = PolyABC(binomial(n, 2)) * a * a - a * PolyABC(m * n) + PolyABC(m * m) -
                           PolyABC(binomial(m, 2)) + a * a - PolyABC(1) + b * PolyABC(n - 4);
        const PolyABC x11 = c * PolyABC(n - 4) - PolyABC(m) + PolyABC(4);
        out.require(to_monomial(m, cn.gamma[2], 2) == std::vector<PolyABC>{x2, x11},
                    "Gamma_2 at " + str(m) + "," + str(n));
      }
    }
  });

  criterion(4, "projected normal-bundle equation equals refined equations", 30000.0, [](Outcome& out) {
    testing::Gen gen(2024);
    for (const auto [m, n] : {std::pair{8, 9}, std::pair{10, 12}, std::pair{12, 15}}) {
      const EmbeddingContext ctx(m, n);
      const auto r10s = refined_eq_10(ctx);
      const auto r11s = refined_eq_11(ctx);
      out.require(r10s.lhs == r10s.rhs && r11s.lhs == r11s.rhs, "symbolic identity at " + str(ctx));
      const auto box = Box::defaults(m);
      for (int r = 0; r < 200; ++r) {
        const Triple t = gen.triple(box.a.hi);
        const auto data = evaluated_data(t);
        const auto eq = normal_equation(ctx, data);
        const auto cn = cn_total(ctx, data);
        const SchubertClass lhs = mul2(eq.multiplier, cn.total());
        const auto r10 = refined_eq_10(cn, data);
        const auto r11 = refined_eq_11(cn, data);
        using IS = TruncSeries<BigInt>;
        const IS one_plus_x(q10_order(m), {BigInt(1), BigInt(1)});
        const std::string where = str(ctx) + " " + str(t);
        out.require(lhs == eq.rhs, "normal equation unsolved at " + where);
        out.require(project_q10(lhs) / one_plus_x == r10.lhs, "w_{1,0} lhs at " + where);
        out.require(project_q10(eq.rhs) / one_plus_x == r10.rhs, "w_{1,0} rhs at " + where);
        out.require(project_q11(lhs) == r11.lhs, "w_{1,1} lhs at " + where);
        out.require(project_q11(eq.rhs) == r11.rhs, "w_{1,1} rhs at " + where);
        for (std::size_t k = 0; k < r10.lhs.order(); ++k) {
          out.require(r10s.lhs[k].evaluate(t) == r10.lhs[k], "symbolic lhs evaluation at " + where);
        }
      }
    }
  });

  criterion(5, "(4,5) and (m,m+1) for m in [5,12]", 60000.0, [](Outcome& out) {
    check_classification(out, 4, 5, {{1, 0, 1}, {1, 1, -1}});
    for (int m = 5; m <= 12; ++m) check_classification(out, m, m + 1, {{1, 0, 1}});
  });

  criterion(6, "linear range cases", 120000.0, [](Outcome& out) {
    for (const auto [m, n] : {std::pair{9, 10}, std::pair{10, 11}, std::pair{10, 12}, std::pair{12, 14},
                              std::pair{12, 15}, std::pair{14, 18}}) {
      check_classification(out, m, n, {{1, 0, 1}});
    }
  });

  criterion(7, "impossible (a,b) pairs", 0.0, [](Outcome& out) {
    for (const auto& r : verify_impossible_pairs()) {
      const std::string where = "(" + str(r.pair.a) + "," + str(r.pair.b) + ") at (" + str(r.pair.m) + "," +
                                str(r.pair.n) + ")";
      out.require(r.impossible, where + " not ruled out");
      out.require(!r.bounded_scan, where + " only checked on a bounded c range");
    }
  });

  criterion(8, "derived facts on survivors", 0.0, [](Outcome& out) {
    out.require(!survivor_lists.empty(), "no survivor lists");
    std::size_t checked = 0;
    for (const auto& [ctx, survivors] : survivor_lists) {
      for (const auto& s : survivors) {
        if (!in_linear_range(ctx) && s.t != Triple{1, 0, 1}) continue;
        const DerivedFacts f = derived_facts(ctx, s.t);
        const std::string where = str(ctx) + " " + str(s.t);
        out.require(f.c_positive, "c >= 1 fails at " + where);
        out.require(f.discriminant_positive, "a^2 > 4b fails at " + where);
        out.require(f.alpha_bound, "alpha bound fails at " + where);
        ++checked;
      }
    }
    out.require(checked > 0, "nothing checked");
  });

  criterion(9, "randomized ring, duality, basis and evaluation suites", 60000.0, [](Outcome& out) {
    testing::Gen gen(99);
    for (int r = 0; r < 1000 && out.ok; ++r) {
      const int m = static_cast<int>(gen.uniform(4, 10));
      const SchubertClass x = gen.schubert(m), y = gen.schubert(m), z = gen.schubert(m);
      out.require(mul2(x, y) == mul2(y, x), "commutativity");
      out.require(mul2(mul2(x, y), z) == mul2(x, mul2(y, z)), "associativity");
      out.require(mul2(x, y + z) == mul2(x, y) + mul2(x, z), "distributivity");
      out.require(mul2(SchubertClass::one(Ambient::of(m)), x) == x, "unit");
      const PolyABC p = gen.poly(), q = gen.poly(), s = gen.poly();
      out.require(p * q == q * p && (p * q) * s == p * (q * s) && p * (q + s) == p * q + p * s, "polynomial ring");
    }
    for (int r = 0; r < 1000 && out.ok; ++r) {
      const int m = static_cast<int>(gen.uniform(4, 10));
      const Partition2 p = gen.partition(m);
      const Partition2 d = dual_cycle(m, p);
      out.require(pairing(m, w(m, p.i, p.j), w(m, d.i, d.j)) == 1, "dual pairing");
      out.require(dual_cycle(m, d) == p, "dual involution");
      const int k = static_cast<int>(gen.uniform(0, 2 * m - 4));
      const SchubertClass u = gen.pure(m, k);
      const SchubertClass v = gen.pure(m, 2 * m - 4 - k);
      out.require(pairing(m, u, v) == pairing(m, v, u), "pairing symmetry");
      out.require(pairing(m, u, v) == top_value(mul2(u, v)), "pairing is the top coefficient");
    }
    for (int r = 0; r < 1000 && out.ok; ++r) {
      const int m = static_cast<int>(gen.uniform(4, 10));
      const int k = static_cast<int>(gen.uniform(0, m - 2));
      const SchubertClass u = gen.pure(m, k);
      const auto coords = to_monomial(m, u, k);
      SchubertClass back(Ambient::of(m));
      for (std::size_t i = 0; i < coords.size(); ++i) {
        back += coords[i] * monomial_class(Ambient::of(m), k, static_cast<int>(i));
      }
      out.require(back == u, "basis round trip");
    }
    for (int r = 0; r < 1000 && out.ok; ++r) {
      const Triple t = gen.triple(30);
      const PolyABC p = gen.poly(), q = gen.poly();
      out.require((p * q).evaluate(t) == p.evaluate(t) * q.evaluate(t), "evaluation of products");
      out.require((p + q).evaluate(t) == p.evaluate(t) + q.evaluate(t), "evaluation of sums");
      const int m = static_cast<int>(gen.uniform(4, 10));
      SymClass x(Ambient::of(m));
      SymClass y(Ambient::of(m));
      for (int i = 0; i < 3; ++i) {
        x.add_term(gen.partition(m), gen.poly(3, 2));
        y.add_term(gen.partition(m), gen.poly(3, 2));
      }
      out.require(evaluate(mul2(x, y), t) == mul2(evaluate(x, t), evaluate(y, t)), "evaluation of classes");
    }
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
