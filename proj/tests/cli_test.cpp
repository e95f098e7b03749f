#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "indsat/io.hpp"

namespace {

const std::string kCli = INDSAT_CLI_PATH;
const std::string kTmp = INDSAT_TEST_TMP;

std::string tmp(const std::string& name) { return kTmp + "/cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout.
CliRun run(const std::string& args, const std::string& tag) {
  const std::string out = tmp(tag + ".stdout");
  const std::string cmd = "'" + kCli + "' " + args + " > '" + out + "' 2> '" + tmp(tag + ".stderr") + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

TEST(Cli, ConstructTwoChainFamily) {
  const CliRun r = run("construct --family 2ck-c1 --n 8 --k 3", "construct");
  ASSERT_EQ(r.code, 0);
  const indsat::Json j = indsat::Json::parse(r.out);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["sets"].size(), 28U);
  EXPECT_EQ(j["generator"]["kind"], "2ck-c1");
}

TEST(Cli, ConstructThenVerifySaturated) {
  const std::string fam = tmp("b3_n5.json");
  ASSERT_EQ(run("construct --family b3 --n 5 --out '" + fam + "'", "b3").code, 0);
  EXPECT_EQ(run("verify --family '" + fam + "' --poset B3 --require-saturated", "verify_b3").code, 0);
  const CliRun j = run("verify --family '" + fam + "' --poset B3 --json", "verify_b3_json");
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.out,
            R"({"poset":"B3","family_size":13,"is_free":true,"exception_count":0,"exceptions":[],)"
            R"("exceptions_truncated":false,"budget_exceeded":false})"
            "\n");
}

TEST(Cli, VerifyFailures) {
  const std::string fam = tmp("mc2.json");
  ASSERT_EQ(run("construct --family mc2-binom --n 6 --t 1 --out '" + fam + "'", "mc2").code, 0);
  EXPECT_EQ(run("verify --family '" + fam + "' --poset 3C2", "mc2_free").code, 0);
  const CliRun sat = run("verify --family '" + fam + "' --poset 3C2 --require-saturated --list-exceptions --json", "mc2_sat");
  EXPECT_EQ(sat.code, 1);
  EXPECT_EQ(indsat::Json::parse(sat.out)["exception_count"], 14);
  EXPECT_EQ(run("verify --family '" + fam + "' --poset 2C2", "mc2_2c2").code, 1);
  EXPECT_EQ(run("verify --family '" + fam + "' --poset 3C2 --budget 5", "mc2_budget").code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("", "noargs").code, 2);
  EXPECT_EQ(run("frobnicate", "unknown").code, 2);
  EXPECT_EQ(run("construct --family b3 --n 2", "badparam").code, 2);
  EXPECT_EQ(run("construct --family nope --n 5", "badkind").code, 2);
  const std::string bad = tmp("bad.json");
  write(bad, R"({"n":3,"sets":[[1],[1]]})");
  EXPECT_EQ(run("verify --family '" + bad + "' --poset C2", "dup").code, 2);
  EXPECT_EQ(run("verify --family '" + bad + "' --poset C2 --lenient", "dup_lenient").code, 0);
  EXPECT_EQ(run("verify --family '" + bad + "' --poset C0", "badposet").code, 2);
  EXPECT_EQ(run("--help", "help").code, 0);
}

TEST(Cli, Solve) {
  const CliRun r = run("solve --n 2 --poset C2", "solve");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"status":"exact","value":1,)"), std::string::npos) << r.out;
  EXPECT_EQ(run("solve --n 4 --poset B3 --solver-budget 2", "solve_budget").code, 3);
  EXPECT_EQ(run("solve --n 12 --poset C2", "solve_big").code, 2);
}

TEST(Cli, FindCopy) {
  const std::string fam = tmp("chain.json");
  write(fam, R"({"n":2,"sets":[[1],[1,2]]})");
  const CliRun r = run("find-copy --family '" + fam + "' --poset C2", "copy");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"poset\":\"C2\",\"images\":[[1],[1,2]]}\n");
  const CliRun none = run("find-copy --family '" + fam + "' --poset 2C1", "copy_none");
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "none\n");
  const CliRun seeded = run("find-copy --family '" + fam + "' --poset C2 --seed 4", "copy_seed");
  EXPECT_EQ(seeded.code, 0);
  EXPECT_EQ(seeded.out, r.out);
}

TEST(Cli, Saturate) {
  const std::string fam = tmp("single.json");
  write(fam, R"({"n":2,"sets":[[1]]})");
  const CliRun r = run("saturate --family '" + fam + "' --poset C2", "saturate");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n\":2,\"sets\":[[1],[2]]}\n");
  const std::string chain = tmp("chain2.json");
  write(chain, R"({"n":2,"sets":[[1],[1,2]]})");
  EXPECT_EQ(run("saturate --family '" + chain + "' --poset C2", "saturate_bad").code, 1);
}

TEST(Cli, BollobasModes) {
  const std::string pairs = tmp("pairs.json");
  write(pairs, R"({"n":3,"pairs":[{"x":[1],"y":[3]},{"x":[2],"y":[1]}]})");
  const CliRun p = run("bollobas --pairs '" + pairs + "' --json", "pairs");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "{\"n\":3,\"pairs\":2,\"bollobas\":false,\"skew_bollobas\":true}\n");

  const std::string fam = tmp("mc2_t2.json");
  ASSERT_EQ(run("construct --family mc2-binom --n 8 --t 2 --out '" + fam + "'", "mc2_t2").code, 0);
  const CliRun s = run("bollobas --family '" + fam + "' --k 6 --t 2 --samples 5 --json", "sample");
  EXPECT_EQ(s.code, 0);
  const indsat::Json j = indsat::Json::parse(s.out);
  EXPECT_EQ(j["copies_found"], 5);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["bound"], 6);
  const CliRun again = run("bollobas --family '" + fam + "' --k 6 --t 2 --samples 5 --json", "sample_again");
  EXPECT_EQ(again.out, s.out);
  EXPECT_EQ(run("bollobas --family '" + fam + "' --pairs '" + pairs + "'", "both").code, 2);
}

}  // namespace
