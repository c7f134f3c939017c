#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasslin/chern/engine.hpp"

namespace grasslin {

enum class ConstraintKind { EqualityClass, InequalityPoly, Divisibility, BoundPredicate };

/// What a constraint talks about; index is the degree k or the intersection index i.
enum class Quantity {
  NormalVanishing,     // c_k(N) = 0
  EulerEquality,       // c_{2n-2m}(N) = e(N)
  BundleNonneg,        // Schubert coefficients of c_k(E) >= 0
  QuotientNonneg,      // Schubert coefficients of φ*(ω̃_{k,0}) >= 0
  NormalNonneg,        // Schubert coefficients of c_k(N) >= 0
  IntersectionNonneg,  // d_i >= 0
  Divisibility12,      // 12 | ab(a^2 - b + 3)
  LinearBound,         // 2a <= m - 5
};

struct Constraint {
  ConstraintKind kind;
  Quantity quantity;
  int index = 0;
  std::string anchor;
  std::string applicability;
  /// Imported from a geometric theorem rather than derived from the Chern-class equation.
  bool licensed = false;
};

std::string to_string(ConstraintKind kind);

struct SystemOptions {
  bool include_bound = true;
};

struct ConstraintSystem {
  EmbeddingContext ctx;
  std::vector<Constraint> constraints;
  /// 2n - 2m > 2m - 4: the equation gives nothing.
  bool no_constraints = false;

  bool has(Quantity q) const;
};

ConstraintSystem build_system(const EmbeddingContext& ctx, SystemOptions options = {});

/// Symbolic payloads, one per constraint.
struct ClassPayload {
  SymClass value;  // equality: value == 0; inequality: every coefficient >= 0
};
struct PolyPayload {
  PolyABC value;  // value >= 0
};
struct DivisibilityPayload {
  BigInt modulus;
  PolyABC value;
};
struct BoundPayload {
  BigInt scale;  // scale * a <= limit
  BigInt limit;
};
using Payload = std::variant<ClassPayload, PolyPayload, DivisibilityPayload, BoundPayload>;

std::vector<Payload> materialize(const ConstraintSystem& system);

/// Evaluates the symbolic payload of c at an integer triple.
bool payload_holds(const Constraint& c, const Payload& payload, const Triple& t);

/// Evaluated-mode quantities for one triple, built lazily on first use.
class TripleState {
 public:
  TripleState(const EmbeddingContext& ctx, const Triple& t);

  const EmbeddingContext& context() const { return ctx_; }
  const Triple& triple() const { return t_; }
  const CNSeries<BigInt>& cn();
  const Pullback<BigInt>& pullback();
  const EulerData<BigInt>& euler();
  const SchubertClass& bundle();

 private:
  EmbeddingContext ctx_;
  Triple t_;
  std::optional<CNSeries<BigInt>> cn_;
  std::optional<Pullback<BigInt>> pb_;
  std::optional<EulerData<BigInt>> euler_;
  std::optional<SchubertClass> bundle_;
};

bool holds(const Constraint& constraint, TripleState& state);

struct TraceEntry {
  std::string anchor;
  bool pass;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct TripleTrace {
  Triple t;
  std::vector<TraceEntry> entries;
  bool pass = true;
  std::optional<std::string> first_failure;
};

/// Evaluates every constraint and records each result.
TripleTrace check_triple(const ConstraintSystem& system, const Triple& t);

/// Same verdict as check_triple(...).pass, stopping at the first failure.
bool passes(const ConstraintSystem& system, const Triple& t);

}  // namespace grasslin
