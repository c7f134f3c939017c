#include "grasslin/io/json_io.hpp"

#include <stdexcept>

namespace grasslin {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

int as_int(const Json& j, const char* what) { return static_cast<int>(as_long(j, what)); }

BigInt as_decimal(const Json& j) {
  if (!j.is_string()) schema_error("coefficients are decimal strings");
  try {
    return parse_decimal(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(e.what());
  }
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

Json ambient_json(const Ambient& amb) { return amb.is_stable() ? Json("stable") : Json(amb.m()); }

Ambient ambient_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "stable") schema_error("ambient must be an integer or \"stable\"");
    return Ambient::stable();
  }
  try {
    return Ambient::of(as_int(j, "m"));
  } catch (const std::invalid_argument& e) {
    schema_error(e.what());
  }
}

template <typename C, typename F>
Json class_json(const GradedClass<C>& cls, F&& coeff) {
  Json terms = Json::array();
  for (const auto& [p, v] : cls.terms()) terms.push_back(Json{{"i", p.i}, {"j", p.j}, {"coeff", coeff(v)}});
  return Json{{"m", ambient_json(cls.ambient())}, {"terms", std::move(terms)}};
}

template <typename C, typename F>
GradedClass<C> class_from(const Json& j, F&& coeff) {
  GradedClass<C> out(ambient_from(field(j, "m")));
  for (const auto& t : as_array(field(j, "terms"), "terms")) {
    const Partition2 p{as_int(field(t, "i"), "i"), as_int(field(t, "j"), "j")};
    if (p.j < 0 || p.i < p.j) schema_error("partition needs i >= j >= 0");
    if (!out.ambient().contains(p)) schema_error("partition outside the box");
    out.add_term(p, coeff(field(t, "coeff")));
  }
  return out;
}

Json range_json(const Range& r) { return Json{{"lo", r.lo}, {"hi", r.hi}}; }

}  // namespace

Json to_json(const PolyABC& p) {
  Json terms = Json::array();
  for (const auto& [e, v] : p.terms()) {
    terms.push_back(Json{{"ea", e.ea}, {"eb", e.eb}, {"ec", e.ec}, {"coeff", to_decimal(v)}});
  }
  return Json{{"terms", std::move(terms)}};
}

PolyABC poly_from_json(const Json& j) {
  PolyABC out;
  for (const auto& t : as_array(field(j, "terms"), "terms")) {
    auto exp = [&](const char* key) {
      const long v = as_long(field(t, key), key);
      if (v < 0) schema_error("exponents are non-negative");
      return static_cast<std::uint32_t>(v);
    };
    out += PolyABC::monomial({exp("ea"), exp("eb"), exp("ec")}, as_decimal(field(t, "coeff")));
  }
  return out;
}

Json to_json(const SchubertClass& cls) {
  return class_json(cls, [](const BigInt& v) { return to_decimal(v); });
}

SchubertClass schubert_from_json(const Json& j) {
  return class_from<BigInt>(j, [](const Json& c) { return as_decimal(c); });
}

Json to_json(const SymClass& cls) {
  return class_json(cls, [](const PolyABC& v) { return to_json(v); });
}

SymClass symclass_from_json(const Json& j) {
  return class_from<PolyABC>(j, [](const Json& c) { return poly_from_json(c); });
}

Json to_json(const CNSeries<PolyABC>& cn) {
  Json gamma = Json::array();
  for (const auto& g : cn.gamma) gamma.push_back(to_json(g));
  Json alpha = Json::array();
  for (const auto& a : cn.alpha) alpha.push_back(to_json(a));
  Json beta = Json::array();
  for (const auto& b : cn.beta) beta.push_back(to_json(b));
  return Json{{"m", cn.ctx.m()}, {"n", cn.ctx.n()}, {"gamma", gamma}, {"alpha", alpha}, {"beta", beta}};
}

CNSeries<PolyABC> cnseries_from_json(const Json& j) {
  auto ctx = [&] {
    try {
      return EmbeddingContext(as_int(field(j, "m"), "m"), as_int(field(j, "n"), "n"));
    } catch (const std::invalid_argument& e) {
      schema_error(e.what());
    }
  }();
  CNSeries<PolyABC> out{ctx, {}, {}, {}};
  for (const auto& g : as_array(field(j, "gamma"), "gamma")) out.gamma.push_back(symclass_from_json(g));
  for (const auto& a : as_array(field(j, "alpha"), "alpha")) out.alpha.push_back(poly_from_json(a));
  for (const auto& b : as_array(field(j, "beta"), "beta")) out.beta.push_back(poly_from_json(b));
  return out;
}

Json to_json(const EulerData<PolyABC>& e) {
  Json d = Json::array();
  for (const auto& v : e.d) d.push_back(to_json(v));
  Json gamma = Json::array();
  for (const auto& v : e.gamma) gamma.push_back(to_json(v));
  return Json{{"d", d}, {"e", to_json(e.e)}, {"gamma", gamma}};
}

Json to_json(const Box& box) {
  Json out;
  out["a"] = range_json(box.a);
  out["b"] = box.b ? range_json(*box.b) : Json{{"lo", 0}, {"hi", "a^2"}};
  out["c"] = box.c ? range_json(*box.c) : Json{{"lo", "-b"}, {"hi", box.c_cap}};
  return out;
}

Box box_from_json(const Json& j) {
  auto range = [](const Json& r) {
    return Range{as_long(field(r, "lo"), "lo"), as_long(field(r, "hi"), "hi")};
  };
  Box out{range(field(j, "a")), std::nullopt, std::nullopt, 0};
  const Json& b = field(j, "b");
  if (field(b, "hi").is_string()) {
    if (field(b, "hi").get<std::string>() != "a^2") schema_error("b.hi must be an integer or \"a^2\"");
  } else {
    out.b = range(b);
  }
  const Json& c = field(j, "c");
  if (field(c, "lo").is_string()) {
    if (field(c, "lo").get<std::string>() != "-b") schema_error("c.lo must be an integer or \"-b\"");
    out.c_cap = as_long(field(c, "hi"), "c.hi");
  } else {
    out.c = range(c);
  }
  return out;
}

Json to_json(const TripleTrace& trace) {
  Json entries = Json::array();
  for (const auto& e : trace.entries) entries.push_back(Json{{"anchor", e.anchor}, {"pass", e.pass}});
  return Json{{"a", trace.t.a}, {"b", trace.t.b}, {"c", trace.t.c}, {"trace", entries}};
}

TripleTrace trace_from_json(const Json& j) {
  TripleTrace out{{as_long(field(j, "a"), "a"), as_long(field(j, "b"), "b"), as_long(field(j, "c"), "c")}, {}, true,
                  std::nullopt};
  for (const auto& e : as_array(field(j, "trace"), "trace")) {
    const Json& pass = field(e, "pass");
    const Json& anchor = field(e, "anchor");
    if (!pass.is_boolean() || !anchor.is_string()) schema_error("trace entries are {anchor: string, pass: bool}");
    out.entries.push_back({anchor.get<std::string>(), pass.get<bool>()});
    if (!pass.get<bool>() && out.pass) {
      out.pass = false;
      out.first_failure = anchor.get<std::string>();
    }
  }
  return out;
}

Json to_json(const Verdict& v) {
  Json survivors = Json::array();
  for (const auto& s : v.survivors) survivors.push_back(to_json(s));
  return Json{{"m", v.ctx.m()},
              {"n", v.ctx.n()},
              {"mode", to_string(v.mode)},
              {"box", to_json(v.box)},
              {"classification", to_string(v.classification)},
              {"survivors", survivors}};
}

Verdict verdict_from_json(const Json& j) {
  try {
    const EmbeddingContext ctx(as_int(field(j, "m"), "m"), as_int(field(j, "n"), "n"));
    const Json& mode = field(j, "mode");
    const Json& cls = field(j, "classification");
    if (!mode.is_string() || !cls.is_string()) schema_error("mode and classification are strings");
    Verdict out{ctx, parse_mode(mode.get<std::string>()), box_from_json(field(j, "box")),
                parse_classification(cls.get<std::string>()), {}};
    for (const auto& s : as_array(field(j, "survivors"), "survivors")) out.survivors.push_back(trace_from_json(s));
    return out;
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind("json: ", 0) == 0) throw;
    schema_error(msg);
  }
}

Json to_json(const ConstraintSystem& system, const std::vector<Payload>& payloads) {
  Json list = Json::array();
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    const Constraint& c = system.constraints[i];
    Json entry{{"anchor", c.anchor}, {"kind", to_string(c.kind)}, {"applicability", c.applicability},
               {"licensed", c.licensed}};
    if (i < payloads.size()) {
      std::visit(
          [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ClassPayload>) {
              entry["payload"] = Json{{"class", to_json(p.value)}};
            } else if constexpr (std::is_same_v<P, PolyPayload>) {
              entry["payload"] = Json{{"poly", to_json(p.value)}};
            } else if constexpr (std::is_same_v<P, DivisibilityPayload>) {
              entry["payload"] = Json{{"modulus", to_decimal(p.modulus)}, {"poly", to_json(p.value)}};
            } else {
              entry["payload"] = Json{{"scale", to_decimal(p.scale)}, {"limit", to_decimal(p.limit)}};
            }
          },
          payloads[i]);
    }
    list.push_back(std::move(entry));
  }
  return Json{{"m", system.ctx.m()},
              {"n", system.ctx.n()},
              {"no_constraints", system.no_constraints},
              {"constraints", list}};
}

Json to_json(const ImpossiblePairReport& r) {
  Json out{{"a", r.pair.a}, {"b", r.pair.b}, {"m", r.pair.m}, {"n", r.pair.n}, {"range", r.pair.range},
           {"impossible", r.impossible}};
  if (r.ab_reason) out["ab_reason"] = *r.ab_reason;
  if (r.root_anchor) out["root_anchor"] = *r.root_anchor;
  if (r.root_window) out["root_window"] = range_json(*r.root_window);
  out["bounded_scan"] = r.bounded_scan;
  Json cands = Json::array();
  for (const auto& [c, f] : r.candidates) cands.push_back(Json{{"c", c}, {"first_failure", f}});
  out["candidates"] = cands;
  return out;
}

}  // namespace grasslin
