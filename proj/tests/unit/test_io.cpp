#include <gtest/gtest.h>

#include "grasslin/io/json_io.hpp"
#include "random_inputs.hpp"

namespace grasslin {
namespace {

TEST(Json, SchubertShape) {
  SchubertClass c = SchubertClass::cycle(Ambient::of(5), {2, 1}, BigInt(-3));
  c.add_term({1, 0}, BigInt("123456789012345678901234567890"));
  EXPECT_EQ(to_json(c).dump(),
            R"({"m":5,"terms":[{"i":1,"j":0,"coeff":"123456789012345678901234567890"},{"i":2,"j":1,"coeff":"-3"}]})");
  EXPECT_EQ(to_json(SchubertClass::cycle(Ambient::stable(), {8, 5})).dump(),
            R"({"m":"stable","terms":[{"i":8,"j":5,"coeff":"1"}]})");
}

TEST(Json, SchubertRoundTrip) {
  testing::Gen gen(51);
  for (int r = 0; r < 200; ++r) {
    const int m = static_cast<int>(gen.uniform(4, 10));
    const SchubertClass c = gen.schubert(m, 6);
    ASSERT_EQ(schubert_from_json(Json::parse(to_json(c).dump())), c);
  }
}

TEST(Json, PolyAndSymClassRoundTrip) {
  testing::Gen gen(53);
  for (int r = 0; r < 100; ++r) {
    const PolyABC p = gen.poly();
    ASSERT_EQ(poly_from_json(Json::parse(to_json(p).dump())), p);
  }
  const SymClass e = chern_E(7);
  EXPECT_EQ(symclass_from_json(to_json(e)), e);
}

TEST(Json, CNSeriesRoundTrip) {
  const auto cn = cn_total(EmbeddingContext(6, 7));
  const auto back = cnseries_from_json(Json::parse(to_json(cn).dump()));
  EXPECT_EQ(back.ctx, cn.ctx);
  EXPECT_EQ(back.gamma, cn.gamma);
  EXPECT_EQ(back.alpha, cn.alpha);
  EXPECT_EQ(back.beta, cn.beta);
  const Json j = to_json(cn);
  EXPECT_EQ(j["m"], 6);
  EXPECT_EQ(j["gamma"].size(), 9u);
}

TEST(Json, BoxRoundTrip) {
  const Box def = Box::defaults(6);
  EXPECT_EQ(to_json(def).dump(), R"({"a":{"lo":1,"hi":24},"b":{"lo":0,"hi":"a^2"},"c":{"lo":"-b","hi":24}})");
  EXPECT_EQ(box_from_json(to_json(def)), def);
  const Box explicit_box = parse_box("a=2:3,b=0:4,c=-1:9", def);
  const Box back = box_from_json(to_json(explicit_box));
  EXPECT_EQ(back.a, explicit_box.a);
  EXPECT_EQ(back.b, explicit_box.b);
  EXPECT_EQ(back.c, explicit_box.c);
}

TEST(Json, VerdictRoundTrip) {
  const Verdict v = classify(EmbeddingContext(6, 7), Mode::FullPipeline);
  const Json j = to_json(v);
  EXPECT_EQ(j["classification"], "LinearOnly");
  EXPECT_EQ(j["mode"], "FullPipeline");
  EXPECT_EQ(j["survivors"][0]["a"], 1);
  const Verdict back = verdict_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.ctx, v.ctx);
  EXPECT_EQ(back.mode, v.mode);
  EXPECT_EQ(back.box, v.box);
  EXPECT_EQ(back.classification, v.classification);
  ASSERT_EQ(back.survivors.size(), v.survivors.size());
  EXPECT_EQ(back.survivors[0].t, v.survivors[0].t);
  EXPECT_EQ(back.survivors[0].entries, v.survivors[0].entries);
  EXPECT_TRUE(back.survivors[0].pass);
}

TEST(Json, TraceFirstFailure) {
  const Json j = Json::parse(R"({"a":5,"b":5,"c":0,"trace":[{"anchor":"x","pass":true},{"anchor":"y","pass":false}]})");
  const TripleTrace tr = trace_from_json(j);
  EXPECT_FALSE(tr.pass);
  EXPECT_EQ(tr.first_failure, "y");
  EXPECT_EQ(to_json(tr).dump(), j.dump());
}

TEST(Json, SystemDump) {
  const ConstraintSystem s = build_system(EmbeddingContext(9, 10));
  const Json j = to_json(s, materialize(s));
  EXPECT_EQ(j["constraints"].size(), s.constraints.size());
  EXPECT_EQ(j["constraints"][0]["kind"], "EqualityClass");
  EXPECT_TRUE(j["constraints"].back()["licensed"].get<bool>());
  EXPECT_EQ(j["constraints"].back()["payload"]["scale"], "2");
}

TEST(Json, SchemaErrors) {
  auto bad = [](const char* text, auto parse) {
    try {
      parse(Json::parse(text));
    } catch (const std::invalid_argument& e) {
      return std::string(e.what()).rfind("json: ", 0) == 0;
    }
    return false;
  };
  auto schubert = [](const Json& j) { return schubert_from_json(j); };
  EXPECT_TRUE(bad(R"({"terms":[]})", schubert));
  EXPECT_TRUE(bad(R"({"m":"tiny","terms":[]})", schubert));
  EXPECT_TRUE(bad(R"({"m":1,"terms":[]})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":{}})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":[{"i":4,"j":0,"coeff":"1"}]})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":[{"i":1,"j":2,"coeff":"1"}]})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":[{"i":1,"j":0,"coeff":1}]})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":[{"i":1,"j":0,"coeff":"1.5"}]})", schubert));
  EXPECT_TRUE(bad(R"({"m":5,"terms":[{"i":"1","j":0,"coeff":"1"}]})", schubert));
  EXPECT_TRUE(bad(R"([1,2])", schubert));

  auto poly = [](const Json& j) { return poly_from_json(j); };
  EXPECT_TRUE(bad(R"({"terms":[{"ea":-1,"eb":0,"ec":0,"coeff":"1"}]})", poly));

  auto box = [](const Json& j) { return box_from_json(j); };
  EXPECT_TRUE(bad(R"({"a":{"lo":1,"hi":2},"b":{"lo":0,"hi":"b^2"},"c":{"lo":0,"hi":1}})", box));

  auto verdict = [](const Json& j) { return verdict_from_json(j); };
  EXPECT_TRUE(bad(R"({"m":3,"n":5,"mode":"full","box":{},"classification":"LinearOnly","survivors":[]})", verdict));
  EXPECT_TRUE(bad(
      R"({"m":5,"n":6,"mode":"fast","box":{"a":{"lo":1,"hi":2},"b":{"lo":0,"hi":"a^2"},"c":{"lo":"-b","hi":3}},"classification":"LinearOnly","survivors":[]})",
      verdict));
  EXPECT_TRUE(bad(
      R"({"m":5,"n":6,"mode":"full","box":{"a":{"lo":1,"hi":2},"b":{"lo":0,"hi":"a^2"},"c":{"lo":"-b","hi":3}},"classification":"Linear","survivors":[]})",
      verdict));
}

TEST(Json, ImpossiblePairReport) {
  const auto r = verify_impossible_pair(impossible_pair_cases()[3]);
  const Json j = to_json(r);
  EXPECT_EQ(j["a"], 5);
  EXPECT_TRUE(j["impossible"].get<bool>());
  EXPECT_TRUE(j.contains("ab_reason"));
  EXPECT_FALSE(j.contains("root_window"));
}

}  // namespace
}  // namespace grasslin
