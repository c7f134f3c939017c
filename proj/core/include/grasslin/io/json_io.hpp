#pragma once

#include <string>

#include "json.hpp"

#include "grasslin/chern/engine.hpp"
#include "grasslin/solver/classify.hpp"

namespace grasslin {

/// Insertion-ordered JSON so documents read in schema order.
using Json = nlohmann::ordered_json;

/// Parsers throw std::invalid_argument on anything outside the schema.

Json to_json(const PolyABC& p);
PolyABC poly_from_json(const Json& j);

Json to_json(const SchubertClass& cls);
SchubertClass schubert_from_json(const Json& j);

Json to_json(const SymClass& cls);
SymClass symclass_from_json(const Json& j);

Json to_json(const CNSeries<PolyABC>& cn);
CNSeries<PolyABC> cnseries_from_json(const Json& j);

Json to_json(const EulerData<PolyABC>& e);

Json to_json(const Box& box);
Box box_from_json(const Json& j);

Json to_json(const TripleTrace& trace);
TripleTrace trace_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const ConstraintSystem& system, const std::vector<Payload>& payloads);

Json to_json(const ImpossiblePairReport& report);

}  // namespace grasslin
