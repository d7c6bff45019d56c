#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "v19/report.hpp"

using namespace v19;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args, bool merge_stderr = false) {
  const char* bin = std::getenv("V19_BIN");
  if (!bin) throw std::runtime_error("V19_BIN is not set");
  const std::string cmd = std::string(bin) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliRun r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_status = 0) {
  const CliRun r = run_cli(args);
  EXPECT_EQ(r.status, expected_status) << args;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, HelpListsCommands) {
  const CliRun r = run_cli("--help");
  EXPECT_EQ(r.status, 0);
  for (const char* c : {"verify", "compute", "solve", "tables", "V19_THREADS"}) EXPECT_NE(r.out.find(c), std::string::npos) << c;
}

TEST(Cli, VerifyYbe) {
  const Json j = run_json("verify ybe --model ik --p 3/2 --samples 20 --seed 4");
  EXPECT_EQ(j["samples"], 20);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["config"]["seed"], 4);
}

TEST(Cli, ComputeZAtOneSiteIsD13) {
  const Json j = run_json("compute z --model fz --p 3/2 --mu 2/3 --x 5");
  const auto ctx = make_context(Model::FZ, Rational(3, 2), {Rational(2, 3)});
  EXPECT_EQ(j["value"], to_string(weight(ctx, WeightName::d(1, 3), Rational(Rational(5) / Rational(2, 3)))));
}

TEST(Cli, BruteforceMatchesMonodromy) {
  const Json a = run_json("compute bruteforce --model ik --p 3/2 --mu 1,2 --boundary fbar --x 7,3,5");
  const Json b = run_json("compute fbar --model ik --p 3/2 --mu 1,2 --x 7 --y 3,5");
  EXPECT_EQ(a["value"], b["value"]);
  const Json z1 = run_json("compute bruteforce --model fz --p 2 --mu 1,3 --boundary z --x 5,-2");
  const Json z2 = run_json("compute z --model fz --p 2 --mu 1,3 --x 5,-2");
  EXPECT_EQ(z1["value"], z2["value"]);
}

TEST(Cli, SolveReproducesTables) {
  const Json j = run_json("solve --model fz --L 2 --p 2 --seed 3 --output json");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["solution"]["kernel_dim"], 1);
  EXPECT_EQ(j["tables"]["compared"], 64);
  EXPECT_TRUE(j["tables"]["mismatches"].empty());
  EXPECT_EQ(j["solution"]["phi"]["phi[3,0,0]"], "0/1");
}

TEST(Cli, TablesAtExplicitQ) {
  const Json j = run_json("tables --model ik --q 9/4,16");
  ASSERT_EQ(j["runs"].size(), 2u);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, VerifyAlgebraAndStructure) {
  const Json a = run_json("verify algebra --model fz --L 1 --samples 2 --seed 9");
  EXPECT_TRUE(a["passed"].get<bool>());
  EXPECT_FALSE(a["relations"].empty());
  const Json s = run_json("verify structure --model ik --L 2 --seed 9");
  EXPECT_TRUE(s["passed"].get<bool>());
}

TEST(Cli, ByteIdenticalReports) {
  const std::string args = "verify algebra --model ik --L 2 --samples 2 --seed 11";
  const CliRun a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  const CliRun c = run_cli("verify algebra --model ik --L 2 --samples 2 --seed 12");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, WritesFileAndStdout) {
  const std::string path = ::testing::TempDir() + "v19_report.json";
  const CliRun to_file = run_cli("compute z --model ik --p 3/2 --mu 1 --x 5 --out " + path);
  EXPECT_EQ(to_file.status, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run_cli("compute z --model ik --p 3/2 --mu 1 --x 5 --out -").out);
}

TEST(Cli, UnwritablePathIsIoError) {
  const CliRun r = run_cli("compute z --model ik --p 3/2 --mu 1 --x 5 --out /nonexistent-dir/report.json", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("IoError"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  CliRun r = run_cli("compute z --model ik --p 3/2 --mu 1,2 --x 5", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("ConfigError"), std::string::npos);
  r = run_cli("solve --model ik --L 5 --p 3/2", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("ConfigError"), std::string::npos);
  r = run_cli("compute z --model ik --p 1 --mu 1 --x 5", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("DegenerateParameter"), std::string::npos);
  r = run_cli("tables --model ik --q 2", true);
  EXPECT_NE(r.out.find("ConfigError"), std::string::npos);
  r = run_cli("verify ybe --model xx", true);
  EXPECT_NE(r.status, 0);
}

TEST(Cli, TimingOnlyWhenAsked) {
  EXPECT_FALSE(run_json("compute z --model ik --p 3/2 --mu 1 --x 5").contains("timing_ms"));
  EXPECT_TRUE(run_json("compute z --model ik --p 3/2 --mu 1 --x 5 --timing").contains("timing_ms"));
}
