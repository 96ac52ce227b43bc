#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "support.hpp"

using henon::testing::data_path;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + HENON_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "henon_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, HeightOfFixedPoint) {
  CliRun r = run("height --map " + data_path("maps/half.json") + " --point 1,1");
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "height");
  EXPECT_EQ(doc["result"]["h_plus"].get<double>(), 0.0);
  EXPECT_EQ(doc["result"]["h_minus"].get<double>(), 0.0);
  EXPECT_EQ(doc["inputs"]["map"]["canonical"].get<std::string>().empty(), false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("height --bogus").code, 1);
  EXPECT_EQ(run("").code, 1);
  auto bad = scratch("linear.json");
  std::ofstream(bad) << R"({"factors": [{"poly": ["0", "1"], "delta": "1"}]})";
  EXPECT_EQ(run("height --map " + bad.string() + " --point 1,1").code, 2);
  EXPECT_EQ(run("height --map " + data_path("maps/half.json") + " --point 1,x").code, 2);
  auto big = scratch("nonic.json");
  std::ofstream(big) << R"({"factors": [{"poly": ["0","0","0","0","0","0","0","0","0","1"], "delta": "1"}]})";
  EXPECT_EQ(run("periodic --map " + big.string() + " --max-period 3 --resultant").code, 3);
}

TEST(Cli, SweepIsDeterministicAcrossThreads) {
  std::string args = "sweep --family-f " + data_path("families/intro_f.json") + " --family-g " +
                     data_path("families/intro_g.json") + " --params -3:3:1/2 --max-period 2 --seed 5";
  CliRun a = run(args + " --threads 1"), b = run(args, "HENON_THREADS=7");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(ja["result"].dump(), jb["result"].dump());
  EXPECT_EQ(ja["result"]["D_observed"], 1);
}

TEST(Cli, ConfigFileAndPrecedence) {
  auto cfg = scratch("run.toml");
  std::ofstream(cfg) << "seed = 17\ntol = 1e-9\n";
  CliRun a = run("--config " + cfg.string() + " green --map " + data_path("maps/half.json") + " --point 0.3,0.2");
  ASSERT_EQ(a.code, 0);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["config"]["seed"], 17);
  EXPECT_EQ(doc["config"]["tol"], 1e-9);
  CliRun b = run("--config " + cfg.string() + " --seed 3 green --map " + data_path("maps/half.json") + " --point 0.3,0.2");
  EXPECT_EQ(nlohmann::json::parse(b.out)["config"]["seed"], 3);
}

TEST(Cli, HeightCacheFromEnvironment) {
  auto cache = scratch("heights.jsonl");
  std::filesystem::remove(cache);
  std::string args = "height --map " + data_path("maps/conservative.json") + " --point 0,1/3";
  CliRun a = run(args, "HENON_CACHE=" + cache.string()), b = run(args, "HENON_CACHE=" + cache.string());
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["result"].dump(), nlohmann::json::parse(b.out)["result"].dump());
  std::ifstream in(cache);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 1);
}

TEST(Cli, MeasureCsvRoundTrip) {
  auto a = scratch("a.csv"), b = scratch("b.csv");
  std::string map = data_path("maps/dissipative.json");
  ASSERT_EQ(run("measure --map " + map + " --period 4 --format csv --out " + a.string()).code, 0);
  ASSERT_EQ(run("measure --map " + map + " --period 4 --format csv --out " + b.string()).code, 0);
  CliRun c = run("measure-compare --a " + a.string() + " --b " + b.string());
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"]["discrepancy"].get<double>(), 0.0);
}
