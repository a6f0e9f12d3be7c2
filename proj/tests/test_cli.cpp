#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORLICZ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ConstantF) {
  const auto r = run("constant-f --phi1 llog:2 --phi2 chi --p 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& row = j.at("rows").at(0);
  EXPECT_EQ(row.at("status"), "ok");
  EXPECT_EQ(row.at("argmin_k0"), 0);
  EXPECT_GT(row.at("value").get<double>(), 1.0);
}

TEST(Cli, EmptyPGridIsConfigError) {
  EXPECT_EQ(run("constant-f --phi1 llog:2").code, 2);
  EXPECT_EQ(run("constant-f --phi1 llog:2 --p 0.5").code, 2);
  EXPECT_EQ(run("constant-f --phi1 bogus:1 --p 2").code, 2);
  EXPECT_EQ(run("no-such-subcommand").code, 2);
}

TEST(Cli, DivergenceExitAndSweepStatus) {
  EXPECT_EQ(run("constant-f --phi1 power:3 --phi2 chi --p 2").code, 3);
  const auto r = run("constant-f --phi1 power:3 --phi2 chi --p 2,4 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,divergent"), std::string::npos);
  EXPECT_NE(r.out.find("4,ok"), std::string::npos);
}

TEST(Cli, GrowthFitCsv) {
  const auto r = run("growth-fit --alpha 0,1,2 --p 1.02,1.01,1.005,1.002 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("alpha,p,p_prime,F,G,fit_exponent,status\n", 0), 0u);
  const auto j = nlohmann::json::parse(run("growth-fit --alpha 0,1,2 --p 1.02,1.01,1.005,1.002").out);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(j.at("fits").at(a).at("exponent").get<double>(), 2.0 + a, 0.2);
}

TEST(Cli, IndicesAndMonotonicity) {
  const auto j = nlohmann::json::parse(run("indices --phi power:2,llog:2").out);
  EXPECT_EQ(j.at("indices").size(), 2u);
  const auto m = nlohmann::json::parse(run("monotonicity --p 1.1,1.05,1.02").out);
  EXPECT_TRUE(m.at("strictly_decreasing").get<bool>());
}

TEST(Cli, VerifyPropositionAndWeakType) {
  const auto p = run("verify-proposition --n 4 --m 4 --rect 1,1 --p 1.5");
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(p.out).at("passed").get<bool>());
  const auto w = run("weak-type --n 2,3 --m 2 --format csv");
  ASSERT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("power:1,dyadic:3xdyadic:2"), std::string::npos);
}

TEST(Cli, StrongMaximalNeedsTwoExponents) {
  EXPECT_EQ(run("strong-maximal --p 1.5 --n 4").code, 2);
  EXPECT_EQ(run("strong-maximal --p 1.5,2 --n 4").code, 0);
}

TEST(Cli, DeterministicOutput) {
  const auto a = run("weak-type --n 3 --m 3");
  const auto b = run("weak-type --n 3 --m 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
