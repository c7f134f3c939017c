// grasslin: Schubert calculus on Gr(2,m) and the embedding constraint solver.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grasslin/io/json_io.hpp"

namespace {

using namespace grasslin;

constexpr int kUsageError = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientArgs {
  std::optional<int> m;
  bool stable = false;

  Ambient resolve(bool allow_stable) const {
    if (stable && m) throw UsageError("give either -m or --stable, not both");
    if (stable) {
      if (!allow_stable) throw UsageError("this command needs a finite ambient -m");
      return Ambient::stable();
    }
    if (!m) throw UsageError("missing -m/--ambient (or --stable)");
    if (*m < 2) throw UsageError("ambient m must be >= 2");
    return Ambient::of(*m);
  }
};

Partition2 parse_cycle(const std::string& token) {
  try {
    return parse_partition2(token);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

EmbeddingContext make_context(int m, int n) {
  try {
    return EmbeddingContext(m, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string monomial_name(int k, int i) {
  std::ostringstream os;
  const int p = k - 2 * i;
  if (p == 0 && i == 0) return "1";
  if (p > 0) os << "ω_{1,0}" << (p > 1 ? "^" + std::to_string(p) : "");
  if (i > 0) os << "ω_{1,1}" << (i > 1 ? "^" + std::to_string(i) : "");
  return os.str();
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        std::cout << row[i];
        break;
      }
      std::cout << std::left << std::setw(static_cast<int>(width[i])) << row[i] << "  ";
    }
    std::cout << '\n';
  }
}

void print_verdict(const Verdict& v, bool trace) {
  std::cout << "(m,n) = (" << v.ctx.m() << "," << v.ctx.n() << ")  mode " << to_string(v.mode) << '\n';
  std::cout << "box: " << describe(v.box) << '\n';
  std::cout << "classification: " << to_string(v.classification) << '\n';
  std::cout << "survivors: " << v.survivors.size() << '\n';
  for (const auto& s : v.survivors) {
    std::cout << "  " << s.t << '\n';
    if (!trace) continue;
    for (const auto& e : s.entries) std::cout << "    " << (e.pass ? "pass " : "FAIL ") << e.anchor << '\n';
  }
}

struct Row {
  std::string label;
  std::string expected;
  std::string got;
  bool pass;
};

std::vector<Row> reproduce_rows(unsigned jobs) {
  std::vector<Row> rows;
  auto verdict_row = [&](int m, int n, Classification expected) {
    const Verdict v = classify(EmbeddingContext(m, n), Mode::FullPipeline, std::nullopt, jobs);
    std::ostringstream got;
    got << to_string(v.classification);
    for (const auto& s : v.survivors) got << ' ' << s.t;
    rows.push_back({"(" + std::to_string(m) + "," + std::to_string(n) + ")", to_string(expected), got.str(),
                    v.classification == expected});
  };
  verdict_row(4, 5, Classification::LinearOrTwisted);
  for (int m = 5; m <= 12; ++m) verdict_row(m, m + 1, Classification::LinearOnly);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{9, 10}, {10, 11}, {10, 12}, {12, 14}, {12, 15}, {14, 18}}) {
    verdict_row(m, n, Classification::LinearOnly);
  }
  verdict_row(4, 9, Classification::NoConstraints);
  for (const auto& r : verify_impossible_pairs()) {
    std::ostringstream label;
    label << "impossible pair (" << r.pair.a << "," << r.pair.b << ") at (" << r.pair.m << "," << r.pair.n << ")";
    std::string got = r.ab_reason ? *r.ab_reason : (r.root_anchor ? *r.root_anchor : "bounded scan");
    rows.push_back({label.str(), "impossible", (r.impossible ? "impossible: " : "possible: ") + got, r.impossible});
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"Schubert calculus on Gr(2,m) and Chern-class constraints for embeddings Gr(2,m) -> Gr(2,n)"};
  app.name("grasslin");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  AmbientArgs amb;
  auto add_ambient = [&](CLI::App* sub) {
    sub->add_option("-m,--ambient", amb.m, "Ambient Gr(2,m)");
    sub->add_flag("--stable", amb.stable, "No truncation");
  };

  std::vector<std::string> cycles;
  auto* mul = app.add_subcommand("mul", "Multiply Schubert cycles i,j");
  add_ambient(mul);
  mul->add_option("cycles", cycles, "Cycles as i,j")->required();

  std::string cycle;
  auto* degree = app.add_subcommand("degree", "Degree of ω_{i,j}·ω_{1,0}^{2m-4-i-j}");
  add_ambient(degree);
  degree->add_option("cycle", cycle, "i,j")->required();

  auto* dual = app.add_subcommand("dual", "Dual Schubert cycle");
  add_ambient(dual);
  dual->add_option("cycle", cycle, "i,j")->required();

  auto* basis = app.add_subcommand("basis", "Monomial coordinates of ω_{i,j} in ω_{1,0}, ω_{1,1}");
  add_ambient(basis);
  basis->add_option("cycle", cycle, "i,j")->required();

  int m = 0;
  int n = 0;
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("m", m, "Source Gr(2,m)")->required();
    sub->add_option("n", n, "Target Gr(2,n)")->required();
  };
  auto* chern = app.add_subcommand("chern", "Symbolic total Chern class of the normal bundle");
  add_mn(chern);
  auto* euler = app.add_subcommand("euler", "Symbolic Euler class and intersection numbers");
  add_mn(euler);
  auto* system = app.add_subcommand("system", "Constraint system for (m,n)");
  add_mn(system);

  auto* solve = app.add_subcommand("solve", "Enumerate Chern data and classify");
  add_mn(solve);
  std::string mode_text = "full";
  std::string box_text;
  std::optional<unsigned> jobs;
  bool trace = false;
  solve->add_option("--mode", mode_text, "numeric|full")->check(CLI::IsMember({"numeric", "full"}));
  solve->add_option("--box", box_text, "a=LO:HI,b=LO:HI,c=LO:HI");
  solve->add_option("--jobs", jobs, "Worker threads (default GRASSLIN_JOBS or 1)");
  solve->add_flag("--trace", trace, "Print every constraint result per survivor");

  auto* reproduce = app.add_subcommand("reproduce", "Run the classification matrix");
  reproduce->add_option("--jobs", jobs, "Worker threads (default GRASSLIN_JOBS or 1)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (mul->parsed()) {
    const Ambient a = amb.resolve(true);
    SchubertClass product = SchubertClass::one(a);
    for (const auto& tok : cycles) {
      const Partition2 p = parse_cycle(tok);
      if (!a.contains(p)) throw UsageError("cycle " + tok + " outside the box of Gr(2," + std::to_string(a.m()) + ")");
      product = mul2(product, SchubertClass::cycle(a, p));
    }
    if (json) std::cout << to_json(product).dump() << '\n';
    else std::cout << product << '\n';
    return 0;
  }
  if (degree->parsed() || dual->parsed() || basis->parsed()) {
    const Ambient a = amb.resolve(false);
    const Partition2 p = parse_cycle(cycle);
    if (!a.contains(p)) throw UsageError("cycle outside the box of Gr(2," + std::to_string(a.m()) + ")");
    if (degree->parsed()) {
      const BigInt d = degree_of(a.m(), p);
      if (json) std::cout << Json{{"m", a.m()}, {"i", p.i}, {"j", p.j}, {"degree", to_decimal(d)}}.dump() << '\n';
      else std::cout << d.get_str() << '\n';
    } else if (dual->parsed()) {
      const Partition2 q = dual_cycle(a.m(), p);
      if (json) std::cout << Json{{"m", a.m()}, {"i", q.i}, {"j", q.j}}.dump() << '\n';
      else std::cout << q << '\n';
    } else {
      if (p.degree() > a.m() - 2) throw UsageError("monomial coordinates need i+j <= m-2");
      const auto coords = to_monomial(a.m(), SchubertClass::cycle(a, p), p.degree());
      if (json) {
        Json terms = Json::array();
        for (std::size_t i = 0; i < coords.size(); ++i) {
          terms.push_back(Json{{"p10", p.degree() - 2 * static_cast<int>(i)}, {"p11", i}, {"coeff", to_decimal(coords[i])}});
        }
        std::cout << Json{{"m", a.m()}, {"i", p.i}, {"j", p.j}, {"terms", terms}}.dump() << '\n';
      } else {
        bool first = true;
        for (std::size_t i = 0; i < coords.size(); ++i) {
          const BigInt& v = coords[i];
          if (v == 0) continue;
          if (!first) std::cout << (v < 0 ? " - " : " + ");
          else if (v < 0) std::cout << '-';
          const BigInt mag = abs(v);
          const std::string mono = monomial_name(p.degree(), static_cast<int>(i));
          if (mag != 1 || mono == "1") std::cout << mag.get_str() << (mono == "1" ? "" : "*");
          if (mono != "1") std::cout << mono;
          first = false;
        }
        std::cout << (first ? "0" : "") << '\n';
      }
    }
    return 0;
  }
  if (chern->parsed()) {
    const EmbeddingContext ctx = make_context(m, n);
    const auto cn = cn_total(ctx);
    if (json) {
      std::cout << to_json(cn).dump() << '\n';
      return 0;
    }
    std::cout << "c(E) = " << chern_E(m) << '\n';
    for (std::size_t k = 0; k < cn.gamma.size(); ++k) std::cout << "c_" << k << "(N) = " << cn.gamma[k] << '\n';
    for (std::size_t k = 0; k < cn.alpha.size(); ++k) {
      std::cout << "alpha_" << k << " = " << cn.alpha[k] << "    beta_" << k << " = " << cn.beta[k] << '\n';
    }
    return 0;
  }
  if (euler->parsed()) {
    const EmbeddingContext ctx = make_context(m, n);
    const Pullback<PolyABC> pb(ctx, symbolic_data());
    const auto e = euler_class(pb);
    if (json) {
      Json out = to_json(e);
      out["m"] = m;
      out["n"] = n;
      std::cout << out.dump() << '\n';
      return 0;
    }
    for (std::size_t i = 0; i < e.d.size(); ++i) std::cout << "d_" << i << " = " << e.d[i] << '\n';
    std::cout << "e(N) = " << e.e << '\n';
    for (std::size_t i = 0; i < e.gamma.size(); ++i) std::cout << "gamma_" << i << " = " << e.gamma[i] << '\n';
    return 0;
  }
  if (system->parsed()) {
    const EmbeddingContext ctx = make_context(m, n);
    const ConstraintSystem sys = build_system(ctx);
    if (json) {
      std::cout << to_json(sys, materialize(sys)).dump() << '\n';
      return 0;
    }
    if (sys.no_constraints) {
      std::cout << "2n-2m > 2m-4: no constraints\n";
      return 0;
    }
    std::vector<std::vector<std::string>> rows{{"anchor", "kind", "applies when"}};
    for (const auto& c : sys.constraints) rows.push_back({c.anchor, to_string(c.kind), c.applicability});
    print_table(rows);
    return 0;
  }
  if (solve->parsed()) {
    const EmbeddingContext ctx = make_context(m, n);
    Box box = Box::defaults(m);
    if (!box_text.empty()) {
      try {
        box = parse_box(box_text, box);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    const Verdict v = classify(ctx, parse_mode(mode_text), box, resolve_jobs(jobs));
    if (json) std::cout << to_json(v).dump() << '\n';
    else print_verdict(v, trace);
    return exit_code(v.classification);
  }
  if (reproduce->parsed()) {
    const auto rows = reproduce_rows(resolve_jobs(jobs));
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass;
    if (json) {
      Json out = Json::array();
      for (const auto& r : rows) out.push_back(Json{{"row", r.label}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
      std::cout << out.dump() << '\n';
    } else {
      std::vector<std::vector<std::string>> table{{"row", "expected", "got", "result"}};
      for (const auto& r : rows) table.push_back({r.label, r.expected, r.got, r.pass ? "pass" : "FAIL"});
      print_table(table);
    }
    return ok ? 0 : 1;
  }
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "grasslin: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "grasslin: " << e.what() << '\n';
    return 1;
  }
}
