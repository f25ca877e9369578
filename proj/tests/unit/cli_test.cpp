#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#ifndef MTP_CLI_PATH
#error "MTP_CLI_PATH must point at the mtp binary"
#endif

namespace {

struct Run {
  int exit_code;
  std::string out;
};

// Runs the tool through the shell; stderr is folded into out when merge is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + " " + MTP_CLI_PATH + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "mtp_cli_" + name; }

}  // namespace

TEST(Cli, EnumerateFamily) {
  const auto r = run("enumerate --k 2 --a-min 4 --a-max 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"a\":4,\"classes\":[[1,4],[2,3]],\"N\":7,\"k\":2,\"sigma\":\"5/2\",\"gamma\":\"3/4\",\"delta\":\"-4\","
            "\"exceeds\":false,\"attains\":true}\n");
}

TEST(Cli, EnumerateEmpty) {
  const auto r = run("enumerate --k 2 --a-min 2 --a-max 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, EnumerateTwoClassFilter) {
  const auto r = run("enumerate --k 4 --a-min 5 --a-max 5 --classes 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"a\":5,\"classes\":[[1,17],[2,2]]"), std::string::npos);
  EXPECT_NE(r.out.find("\"delta\":\"9\""), std::string::npos);
}

TEST(Cli, EnumerateN1Filter) {
  const auto r = run("enumerate --k 2 --a-min 7 --a-max 7 --max-classes 3 --n1 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[[1,1],[2,4],[4,2]]"), std::string::npos);
  EXPECT_EQ(run("enumerate --k 2 --a-max 7 --n1 2+").exit_code, 0);
  EXPECT_EQ(run("enumerate --k 2 --a-max 7 --n1 x").exit_code, 2);
}

TEST(Cli, EnumerateBadFlags) {
  EXPECT_EQ(run("enumerate --k 1 --a-max 4").exit_code, 2);
  EXPECT_EQ(run("enumerate --k 2 --a-min 5 --a-max 4").exit_code, 2);
  EXPECT_EQ(run("enumerate --a-max 4").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST(Cli, VerifyVacuous) {
  const auto r = run("verify --k-max 2 --a-max 3");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("VACUOUS  lemma-l3"), std::string::npos);
  EXPECT_NE(r.out.find("vacuous"), std::string::npos);
  EXPECT_NE(r.out.find("ALL PASS"), std::string::npos);
}

TEST(Cli, VerifySmallPassesAndWritesJson) {
  const auto json = temp_path("verify.json");
  const auto r = run("verify --k-max 3 --a-max 16 --json " + json);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  lemma1"), std::string::npos);
  std::ifstream in(json);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("\"passed\": true"), std::string::npos);
}

TEST(Cli, VerifyInjectedFaultNamesLemma1) {
  const auto r = run("verify --k-max 2 --a-max 6 --inject-delta-offset 4", true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("FAIL  lemma1"), std::string::npos);
  EXPECT_NE(r.out.find("violation in lemma1: {a=4,[(1,4),(2,3)]}"), std::string::npos);
}

TEST(Cli, HuntKTwo) {
  const auto r = run("hunt --k 2 --a-max 12");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"candidates\": []"), std::string::npos);
  EXPECT_NE(r.out.find("\"version\""), std::string::npos);
}

TEST(Cli, HuntRejectsKOne) {
  const auto r = run("hunt --k 1 --a-max 5", true);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, RealizeWithSvg) {
  const auto svg = temp_path("family.svg");
  std::remove(svg.c_str());
  const auto r = run("realize --a 4 --classes 1:4,2:3 --svg " + svg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("Realized", 0), 0u);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::regex rect("<rect ");
  EXPECT_EQ(std::distance(std::sregex_iterator(text.begin(), text.end(), rect), std::sregex_iterator()), 7);
}

TEST(Cli, RealizeUnrealizable) {
  const auto r = run("realize --a 3 --classes 1:1,2:2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("Unrealizable", 0), 0u);
}

TEST(Cli, RealizeAreaMismatch) {
  const auto r = run("realize --a 4 --classes 1:5,2:3", true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("AreaMismatch"), std::string::npos);
}

TEST(Cli, Determinism) {
  for (const std::string args : {"enumerate --k 3 --a-max 14", "verify --k-max 3 --a-max 14", "hunt --k 3 --a-max 12"}) {
    const auto first = run(args);
    const auto second = run(args);
    EXPECT_EQ(first.exit_code, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
    EXPECT_GT(lines(first.out), 0u);
  }
}

TEST(Cli, JobsAndEnvironment) {
  const auto serial = run("enumerate --k 3 --a-max 16");
  EXPECT_EQ(run("enumerate --k 3 --a-max 16 --jobs 3").out, serial.out);
  EXPECT_EQ(run("enumerate --k 3 --a-max 16", false, "MTP_JOBS=2").out, serial.out);
  EXPECT_EQ(run("enumerate --k 3 --a-max 16", false, "MTP_JOBS=0").exit_code, 2);
}

TEST(Cli, ConfigFile) {
  const auto cfg = temp_path("enum.cfg");
  {
    std::ofstream out(cfg);
    out << "[enumerate]\nk = 2\na-min = 4\na-max = 4\n";
  }
  const auto r = run("enumerate --config " + cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines(r.out), 1u);
  EXPECT_NE(r.out.find("\"a\":4"), std::string::npos);
  // command-line flags win over the file
  EXPECT_EQ(run("enumerate --config " + cfg + " --a-min 2 --a-max 2").out, "");
  EXPECT_EQ(run("--config " + cfg + " enumerate").out, r.out);
}

TEST(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("mtp ", 0), 0u);
}
