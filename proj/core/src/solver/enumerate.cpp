#include "grasslin/solver/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace grasslin {

namespace {

using Series = TruncSeries<BigInt>;

Range parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("range must be LO:HI");
  auto parse = [](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad integer '" + std::string(s) + "' in box");
    }
    return v;
  };
  return {parse(text.substr(0, colon)), parse(text.substr(colon + 1))};
}

Series binomial_power(std::size_t ord, long lin, long quad, unsigned exponent) {
  return Series(ord, {BigInt(1), BigInt(lin), BigInt(quad)}).pow(exponent);
}

}  // namespace

Box Box::defaults(int m) { return Box{{1, 4L * m}, std::nullopt, std::nullopt, 4L * m}; }

void Box::validate() const {
  auto check = [](const Range& r, const char* name) {
    if (r.empty()) throw std::invalid_argument(std::string("empty range for ") + name);
  };
  check(a, "a");
  if (b) check(*b, "b");
  if (c) check(*c, "c");
}

std::string describe(const Box& box) {
  std::ostringstream os;
  os << "a in [" << box.a.lo << ", " << box.a.hi << "], ";
  if (box.b) os << "b in [" << box.b->lo << ", " << box.b->hi << "], ";
  else os << "b in [0, a^2], ";
  if (box.c) os << "c in [" << box.c->lo << ", " << box.c->hi << "]";
  else os << "c in [-b, " << box.c_cap << "]";
  return os.str();
}

Box parse_box(const std::string& text, const Box& base) {
  Box out = base;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.size() < 3 || item[1] != '=') throw std::invalid_argument("box entries look like a=LO:HI");
    const Range r = parse_range(item.substr(2));
    switch (item[0]) {
      case 'a': out.a = r; break;
      case 'b': out.b = r; break;
      case 'c': out.c = r; break;
      default: throw std::invalid_argument(std::string("unknown box variable '") + item[0] + "'");
    }
  }
  out.validate();
  return out;
}

Box effective_box(const ConstraintSystem& system, const Box& box) {
  Box out = box;
  if (system.has(Quantity::LinearBound)) {
    // 2a <= m - 5, with floor division valid because m - 5 >= 4 here.
    out.a.hi = std::min(out.a.hi, static_cast<long>((system.ctx.m() - 5) / 2));
  }
  return out;
}

Prefilter::Prefilter(const ConstraintSystem& system)
    : system_(system),
      div12_(system.has(Quantity::Divisibility12)),
      bound_(system.has(Quantity::LinearBound)) {}

std::optional<std::string> Prefilter::reject_ab(long a, long b) const {
  if (system_.no_constraints) return std::nullopt;
  const int m = system_.ctx.m();
  const int n = system_.ctx.n();
  const int rho = system_.ctx.normal_rank();
  if (a < 0 || b < 0) return "I1 nonneg c(E)";
  if (bound_ && 2 * a > m - 5) return "B1 bound 2a<=m-5 [licensed]";
  if (div12_) {
    const BigInt v = BigInt(a) * b * (BigInt(a) * a - b + 3);
    if (!mpz_divisible_ui_p(v.get_mpz_t(), 12)) return "D1 div12 12|ab(a^2-b+3)";
  }

  const std::size_t ord = q10_order(m);
  const Series num = binomial_power(ord, a, b, static_cast<unsigned>(n)) * Series(ord, {BigInt(1), BigInt(-1)});
  const Series den = Series(ord, {BigInt(1), BigInt(0), BigInt(4 * b - a * a)}) *
                     Series(ord, {BigInt(1), BigInt(1)}).pow(static_cast<unsigned>(m - 1));
  const Series alpha = num / den;
  for (int k = 1; k <= m - 2; ++k) {
    const int s = sgn(alpha[static_cast<std::size_t>(k)]);
    if (k > rho && s != 0) return "E1 vanishing, w_{1,0}-projection of c_" + std::to_string(k) + "(N)";
    if (k <= rho && s < 0) return "I1 nonneg, w_{" + std::to_string(k) + ",0}-coefficient of c_" + std::to_string(k) + "(N)";
  }

  const int hmax = std::min(n - 2, m - 2);
  const Series h = Series::one(ord) / Series(ord, {BigInt(1), BigInt(-a), BigInt(b)});
  for (int k = 1; k <= hmax; ++k) {
    if (sgn(h[static_cast<std::size_t>(k)]) < 0) return "I1 nonneg, w_{" + std::to_string(k) + ",0}-coefficient of pullback w_{" + std::to_string(k) + ",0}";
  }
  return std::nullopt;
}

bool Prefilter::admits_ab(long a, long b) const { return !reject_ab(a, b).has_value(); }

bool Prefilter::admits_c(long c) const {
  if (system_.no_constraints) return true;
  const int m = system_.ctx.m();
  const int n = system_.ctx.n();
  const std::size_t ord = q11_order(m);
  const Series num = Series(ord, {BigInt(1), BigInt(c)}).pow(static_cast<unsigned>(n)) * Series(ord, {BigInt(1), BigInt(4)});
  const Series den = Series(ord, {BigInt(1), BigInt(4 * c)}) * Series(ord, {BigInt(1), BigInt(1)}).pow(static_cast<unsigned>(m));
  const Series beta = num / den;
  for (std::size_t k = static_cast<std::size_t>(n - m + 1); k < ord; ++k) {
    if (!is_zero(beta[k])) return false;
  }
  return true;
}

EnumerationResult enumerate(const ConstraintSystem& system, const Box& requested, unsigned jobs) {
  requested.validate();
  EnumerationResult result;
  result.box = effective_box(system, requested);
  if (system.no_constraints || result.box.a.empty()) return result;
  const Box& box = result.box;

  // The c-level filter depends on c alone; tabulate it once.
  long c_lo = 0;
  long c_hi = 0;
  if (box.c) {
    c_lo = box.c->lo;
    c_hi = box.c->hi;
  } else {
    long b_max = 0;
    for (long a = box.a.lo; a <= box.a.hi; ++a) b_max = std::max(b_max, box.b_range(a).hi);
    c_lo = std::min(-b_max, box.c_cap);
    long b_min = box.b ? box.b->lo : 0;
    c_hi = std::max(box.c_cap, -b_min);
  }
  const Prefilter filter(system);
  std::vector<char> c_ok(static_cast<std::size_t>(c_hi - c_lo + 1));
  for (long c = c_lo; c <= c_hi; ++c) c_ok[static_cast<std::size_t>(c - c_lo)] = filter.admits_c(c) ? 1 : 0;

  jobs = std::max(1U, jobs);
  struct Partial {
    std::vector<Triple> found;
    std::uint64_t candidates = 0;
    std::uint64_t full_checks = 0;
  };
  std::vector<Partial> partials(jobs);

  auto work = [&](unsigned w) {
    Partial& part = partials[w];
    for (long a = box.a.lo + static_cast<long>(w); a <= box.a.hi; a += static_cast<long>(jobs)) {
      const Range br = box.b_range(a);
      for (long b = br.lo; b <= br.hi; ++b) {
        const Range cr = box.c_range(b);
        if (!cr.empty()) part.candidates += static_cast<std::uint64_t>(cr.hi - cr.lo + 1);
        if (cr.empty() || !filter.admits_ab(a, b)) continue;
        for (long c = cr.lo; c <= cr.hi; ++c) {
          if (!c_ok[static_cast<std::size_t>(c - c_lo)]) continue;
          ++part.full_checks;
          if (passes(system, {a, b, c})) part.found.push_back({a, b, c});
        }
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::vector<Triple> merged;
  for (const auto& part : partials) {
    merged.insert(merged.end(), part.found.begin(), part.found.end());
    result.candidates += part.candidates;
    result.full_checks += part.full_checks;
  }
  std::sort(merged.begin(), merged.end());
  for (const Triple& t : merged) result.survivors.push_back(check_triple(system, t));
  return result;
}

std::vector<Triple> enumerate_brute_force(const ConstraintSystem& system, const Box& requested) {
  requested.validate();
  const Box box = effective_box(system, requested);
  std::vector<Triple> out;
  if (system.no_constraints) return out;
  for (long a = box.a.lo; a <= box.a.hi; ++a) {
    const Range br = box.b_range(a);
    for (long b = br.lo; b <= br.hi; ++b) {
      const Range cr = box.c_range(b);
      for (long c = cr.lo; c <= cr.hi; ++c) {
        if (check_triple(system, {a, b, c}).pass) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

unsigned resolve_jobs(std::optional<unsigned> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("GRASSLIN_JOBS")) {
    unsigned v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return 1;
}

}  // namespace grasslin
