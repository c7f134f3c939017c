#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "grasslin/io/json_io.hpp"

namespace grasslin {
namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(GRASSLIN_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

TEST(Cli, Mul) {
  EXPECT_EQ(run("mul --stable 8,5 7,3").out, "ω_{15,8} + ω_{14,9} + ω_{13,10} + ω_{12,11}\n");
  EXPECT_EQ(run("mul -m 5 3,0 1,0").out, "ω_{3,1}\n");
  EXPECT_EQ(run("mul -m 4 0,0 2,0").out, "ω_{2,0}\n");
  const Outcome j = run("mul --json -m 9 2,1 3,0 1,1");
  ASSERT_EQ(j.status, 0);
  const SchubertClass w21 = SchubertClass::cycle(Ambient::of(9), {2, 1});
  const SchubertClass expect =
      mul2(mul2(w21, SchubertClass::cycle(Ambient::of(9), {3, 0})), SchubertClass::cycle(Ambient::of(9), {1, 1}));
  EXPECT_EQ(schubert_from_json(Json::parse(j.out)), expect);
}

TEST(Cli, RingQueries) {
  EXPECT_EQ(run("degree -m 4 0,0").out, "2\n");
  EXPECT_EQ(run("degree -m 7 0,0").out, "42\n");
  EXPECT_EQ(run("dual -m 17 8,5").out, "ω_{10,7}\n");
  EXPECT_EQ(run("basis -m 6 4,0").out, "ω_{1,0}^4 - 3*ω_{1,0}^2ω_{1,1} + ω_{1,1}^2\n");
}

TEST(Cli, ChernAndEulerJson) {
  const Outcome c = run("chern --json 6 7");
  ASSERT_EQ(c.status, 0);
  const auto cn = cnseries_from_json(Json::parse(c.out));
  EXPECT_EQ(cn.gamma, cn_total(EmbeddingContext(6, 7)).gamma);
  const Outcome e = run("euler --json 4 5");
  ASSERT_EQ(e.status, 0);
  EXPECT_EQ(Json::parse(e.out)["d"].size(), 2u);
}

TEST(Cli, SystemJson) {
  const Outcome s = run("system --json 9 10");
  ASSERT_EQ(s.status, 0);
  const Json j = Json::parse(s.out);
  EXPECT_EQ(j["constraints"].size(), build_system(EmbeddingContext(9, 10)).constraints.size());
}

TEST(Cli, SolveVerdicts) {
  const Outcome v45 = run("solve --json 4 5");
  EXPECT_EQ(v45.status, 0);
  const Verdict v = verdict_from_json(Json::parse(v45.out));
  EXPECT_EQ(v.classification, Classification::LinearOrTwisted);
  ASSERT_EQ(v.survivors.size(), 2u);
  EXPECT_EQ(v.survivors[1].t, (Triple{1, 1, -1}));

  const Outcome v1012 = run("solve 10 12 --jobs 2");
  EXPECT_EQ(v1012.status, 0);
  EXPECT_NE(v1012.out.find("LinearOnly"), std::string::npos);

  EXPECT_EQ(run("solve 4 9").status, 3);
  EXPECT_EQ(run("solve 6 7 --mode numeric --box a=1:2,c=-1:3").status, 0);
  // A box that excludes (1,0,1) leaves nothing: inconclusive.
  EXPECT_EQ(run("solve 6 7 --box a=2:3").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("solve 3 5").status, 64);
  EXPECT_EQ(run("solve 6 5").status, 64);
  EXPECT_EQ(run("solve 5 6 --box a=3:1").status, 64);
  EXPECT_EQ(run("solve 5 6 --box q=1:2").status, 64);
  EXPECT_EQ(run("solve 5 6 --mode fast").status, 64);
  EXPECT_EQ(run("mul -m 5 1,2").status, 64);
  EXPECT_EQ(run("mul -m 5 1-2").status, 64);
  EXPECT_EQ(run("mul -m 5 4,0 1,0").status, 64);
  EXPECT_EQ(run("frobnicate").status, 64);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Reproduce) {
  const Outcome r = run("reproduce --jobs 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("fail"), std::string::npos);
  EXPECT_NE(r.out.find("impossible pair (5,5) at (8,9)"), std::string::npos);
}

}  // namespace
}  // namespace grasslin
