#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasslin/solver/enumerate.hpp"

namespace grasslin {

enum class Mode { NumericOnly, FullPipeline };
enum class Classification { LinearOnly, LinearOrTwisted, Inconclusive, NoConstraints };

std::string to_string(Mode mode);
std::string to_string(Classification cls);
Mode parse_mode(const std::string& text);
Classification parse_classification(const std::string& text);

/// Chern data of E(2,m) ⊗ L with c_1(L) = r.
struct TensorLine {
  long r;
};
/// Chern data of L_1 ⊕ L_2 with c_1(L_i) = r_i, r_1 >= r_2.
struct SplitLines {
  long r1;
  long r2;
};
using BVFamily = std::variant<TensorLine, SplitLines>;

Triple chern_data(const BVFamily& family);
std::string describe(const BVFamily& family);

/// m >= 9 and 2n <= 3m - 6: rank-2 bundles on Gr(2,m) split or are twists of E(2,m).
bool bv_licensed(const EmbeddingContext& ctx);

/// Families allowed by the degree bound: 2(2r+1) < m - 4 and 2(r_1+r_2) < m - 4.
std::vector<BVFamily> bv_families(const EmbeddingContext& ctx);

/// The family member with these Chern data, if any.
std::optional<BVFamily> bv_member(const EmbeddingContext& ctx, const Triple& t);

/// Keeps family members when licensed and everything otherwise; appends a trace entry either way.
std::vector<TripleTrace> bv_filter(const EmbeddingContext& ctx, std::vector<TripleTrace> survivors);

struct Verdict {
  EmbeddingContext ctx;
  Mode mode;
  Box box;
  Classification classification;
  std::vector<TripleTrace> survivors;
};

Classification classify_survivors(const std::vector<TripleTrace>& survivors);

/// NumericOnly: the system (with its licensed a bound) over the box.
/// FullPipeline: NumericOnly, then the family filter where licensed, then a final check.
Verdict classify(const EmbeddingContext& ctx, Mode mode, std::optional<Box> box = std::nullopt, unsigned jobs = 1);

/// Exit status for a classification: 0 linear, 2 inconclusive, 3 no constraints.
int exit_code(Classification cls);

struct ImpossiblePairCase {
  long a;
  long b;
  int m;
  int n;
  std::string range;
};

struct ImpossiblePairReport {
  ImpossiblePairCase pair;
  bool impossible;
  /// (a, b)-level reason that rules out every c, when one exists.
  std::optional<std::string> ab_reason;
  /// Otherwise an equality constraint whose coefficient, as a polynomial in c,
  /// has every integer root inside root_window; all other c fail it.
  std::optional<std::string> root_anchor;
  std::optional<Range> root_window;
  /// Set when no such polynomial exists and the window is a plain bounded scan.
  bool bounded_scan = false;
  /// Each remaining candidate c with its first failing constraint ("" if it passed).
  std::vector<std::pair<long, std::string>> candidates;
};

/// Smallest R >= 1 with |p(c)| > 0 for every integer |c| >= R; p given by
/// ascending coefficients and not identically zero.
BigInt integer_root_bound(const std::vector<BigInt>& coeffs);

/// (3,2), (4,3), (5,4) at (10,13); (5,5) at (8,9); (5,6) at (10,14).
std::vector<ImpossiblePairCase> impossible_pair_cases();

/// Checks each case against the system without the imported a bound.
std::vector<ImpossiblePairReport> verify_impossible_pairs();
ImpossiblePairReport verify_impossible_pair(const ImpossiblePairCase& pair);

/// Facts every linear-range survivor must satisfy: c >= 1, a^2 > 4b and
/// (m-2)!(m-1)! α_{2n-2m} >= (2m-4)! b^{n-2}.
struct DerivedFacts {
  bool c_positive;
  bool discriminant_positive;
  bool alpha_bound;
  bool all() const { return c_positive && discriminant_positive && alpha_bound; }
};

/// Requires 2n - 2m <= m - 2.
DerivedFacts derived_facts(const EmbeddingContext& ctx, const Triple& t);

/// m <= n <= (3m-6)/2.
bool in_linear_range(const EmbeddingContext& ctx);

}  // namespace grasslin
