#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(CLBITS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const CliResult r = run(args + " --json");
  EXPECT_EQ(r.exit_code, 0) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, Classify) {
  const CliResult text = run("classify 3 1");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_EQ(text.out.rfind("Cl(3,1) \xE2\x89\x85 R(4), central simple, \xCF\x89\xC2\xB2=\xE2\x88\x92" "1", 0), 0U) << text.out;

  const auto j = run_json("classify 2 2");
  EXPECT_EQ(j["base"], "R");
  EXPECT_EQ(j["matrix_size"], 4);

  const auto c = run_json("classify 0 1");
  EXPECT_EQ(c["base"], "C");
  EXPECT_FALSE(c["central"].get<bool>());
  EXPECT_TRUE(c["simple"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("classify x 1").exit_code, 2);
  EXPECT_EQ(run("classify -1 1").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("nonsense").exit_code, 2);
  EXPECT_EQ(run("efb-table 5").exit_code, 2);
  EXPECT_EQ(run("mul 1 \"g1 +\" g1").exit_code, 2);
  EXPECT_EQ(run("mul 1 g3 g1").exit_code, 2);  // generator outside Cl(1,1)
  EXPECT_EQ(run("mul 1 g1 g1 --engine nope").exit_code, 2);
  EXPECT_EQ(run("bench 9").exit_code, 2);
}

TEST(Cli, Cube) {
  const auto j = run_json("cube");
  ASSERT_EQ(j["vertices"].size(), 8U);
  EXPECT_EQ(j["vertices"][0]["algebra"], "R");
  EXPECT_EQ(j["vertices"][4]["algebra"], "H");
  EXPECT_EQ(j["vertices"][1]["algebra"], "2R");
  EXPECT_NE(run("cube").out.find("R\xE2\x8A\x95R"), std::string::npos);
  EXPECT_NE(run("cube").out.find("(4) H"), std::string::npos);
}

TEST(Cli, EFBTable) {
  const auto j = run_json("efb-table 2");
  for (const auto& e : j["entries"]) {
    if (e["row"] == 3 && e["col"] == 0) EXPECT_EQ(e["word"], "p1 p2");
    if (e["row"] == 0 && e["col"] == 3) {
      EXPECT_EQ(e["word"], "q1 q2");
      EXPECT_EQ(e["sign"], 1);
    }
  }
  const CliResult env = run("efb-table 2 | cat; CLBITS_ASCII=1 " + std::string(CLBITS_CLI_PATH) + " efb-table 2");
  EXPECT_NE(env.out.find("-- (3) | - p1 p2"), std::string::npos) << env.out;
  EXPECT_EQ(run("efb-table 0").exit_code, 2);
}

TEST(Cli, Mul) {
  EXPECT_EQ(run("mul 1 g1 g1").out, "1\n");
  EXPECT_EQ(run("mul 1 g2 g2").out, "-1\n");
  const CliResult efb = run("mul 2 \"g1 g2\" \"g3 g4\" --engine efb");
  const CliResult blade = run("mul 2 \"g1 g2\" \"g3 g4\" --engine blade");
  EXPECT_EQ(efb.exit_code, 0);
  EXPECT_EQ(efb.out, blade.out);
  EXPECT_EQ(efb.out, "g1 g2 g3 g4\n");
  const auto both = run_json("mul 2 \"1/2 g1 + g3\" \"g2 g4 - 3\" --engine both");
  EXPECT_TRUE(both["identical"].get<bool>());
  EXPECT_EQ(both["efb"], both["blade"]);
}

TEST(Cli, Verify) {
  const CliResult quick = run("verify quick");
  EXPECT_EQ(quick.exit_code, 0) << quick.out;
  const auto j = run_json("verify quick");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["level"], "quick");
  for (const auto& s : j["suites"]) {
    EXPECT_TRUE(s["passed"].get<bool>()) << s["name"];
    EXPECT_EQ(s["failures"], 0);
  }
}

TEST(Cli, Bench) {
  const auto j = run_json("bench 4");
  ASSERT_EQ(j["rows"].size(), 4U);
  for (const auto& row : j["rows"]) {
    const int m = row["m"];
    EXPECT_EQ(row["expected_ratio"], 1 << m);
    EXPECT_EQ(row["blade_pairs"].get<std::uint64_t>(), row["efb_triples"].get<std::uint64_t>() << m);
    EXPECT_TRUE(row["ratio_exact"].get<bool>());
  }
  EXPECT_EQ(j["rows"][1]["blade_pairs"], 256);
  EXPECT_EQ(j["rows"][1]["efb_triples"], 64);
}
