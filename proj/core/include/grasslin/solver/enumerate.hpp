#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasslin/solver/constraints.hpp"

namespace grasslin {

struct Range {
  long lo;
  long hi;
  bool empty() const { return lo > hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Search box for (a, b, c). A missing b range means [0, a^2]; a missing c
/// range means [-b, c_cap].
struct Box {
  Range a;
  std::optional<Range> b;
  std::optional<Range> c;
  long c_cap = 0;

  /// a in [1, 4m], b in [0, a^2], c in [-b, 4m].
  static Box defaults(int m);

  Range b_range(long a) const { return b ? *b : Range{0, a * a}; }
  Range c_range(long b_value) const { return c ? *c : Range{-b_value, c_cap}; }

  /// Throws std::invalid_argument for an explicit range with lo > hi.
  void validate() const;

  friend bool operator==(const Box&, const Box&) = default;
};

std::string describe(const Box& box);

/// Parses "a=LO:HI,b=LO:HI,c=LO:HI" on top of base; omitted keys keep base values.
Box parse_box(const std::string& text, const Box& base);

/// The a-range after the imported bound 2a <= m - 5, when the system carries it.
Box effective_box(const ConstraintSystem& system, const Box& box);

/// Necessary conditions read off the quotient-ring projections of the
/// normal-bundle equation. Each follows from constraints in the system, so
/// dropping a triple here never changes the survivor set.
class Prefilter {
 public:
  explicit Prefilter(const ConstraintSystem& system);

  /// Conditions depending on (a, b) only: divisibility, the a bound, the
  /// ω_{1,0}-projection of vanishing and non-negativity, and positivity of the
  /// ω_{k,0}-coefficients of φ*(ω̃_{k,0}).
  bool admits_ab(long a, long b) const;
  /// Conditions depending on c only: the ω_{1,1}-projection of vanishing.
  bool admits_c(long c) const;

  /// Name of the first (a, b)-level condition that fails, if any.
  std::optional<std::string> reject_ab(long a, long b) const;

 private:
  ConstraintSystem system_;
  bool div12_;
  bool bound_;
};

struct EnumerationResult {
  Box box;
  std::vector<TripleTrace> survivors;
  std::uint64_t candidates = 0;
  std::uint64_t full_checks = 0;
};

/// Survivors of the system in the box, sorted by (a, b, c). The a-range is
/// split across jobs threads; the result does not depend on jobs.
EnumerationResult enumerate(const ConstraintSystem& system, const Box& box, unsigned jobs = 1);

/// Reference enumeration: every triple in the box through check_triple.
std::vector<Triple> enumerate_brute_force(const ConstraintSystem& system, const Box& box);

/// Worker count from an explicit request, the GRASSLIN_JOBS variable, or 1.
unsigned resolve_jobs(std::optional<unsigned> requested);

}  // namespace grasslin
