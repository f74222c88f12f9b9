#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oksphere/cli.hpp"

using namespace oksphere;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "oksphere_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, EnergyJson) {
  const auto r = run({"energy", "--z", "-0.5,0.5", "--gamma", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j.at("total_over_pi").get<double>(), 3.96278, 5e-6);
  EXPECT_EQ(j.at("meta").at("version"), "0.1.0");
}

TEST(Cli, NegativeListWithEquals) {
  EXPECT_EQ(run({"energy", "--z=-0.5,0.5", "--gamma=1"}).code, kExitOk);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"energy", "--z", "0.5,-0.5", "--gamma", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"energy", "--z", "0.5"}).code, kExitUsage);
}

TEST(Cli, NumericalFailureExitCode) {
  const auto r = run({"critical", "solve", "--n", "3", "--gamma", "2", "--tol", "1e-30"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("NoConvergence"), std::string::npos);
}

TEST(Cli, CsvIsDeterministic) {
  const std::vector<std::string> args = {"sweep2", "--z1", "-0.9:0:5", "--gamma", "0.1:1:3"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# oksphere 0.1.0 config=", 0), 0u);
  EXPECT_NE(a.out.find("z1,gamma,energy_over_pi"), std::string::npos);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto cfg = scratch_dir() / "energy.json";
  std::ofstream(cfg) << R"({"z": [-0.5, 0.5], "gamma": 1})";
  const auto from_file = run({"energy", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(nlohmann::json::parse(from_file.out).at("gamma"), 1.0);
  const auto overridden = run({"energy", "--config", cfg.string(), "--gamma", "2"});
  ASSERT_EQ(overridden.code, kExitOk) << overridden.err;
  EXPECT_EQ(nlohmann::json::parse(overridden.out).at("gamma"), 2.0);
}

TEST(Cli, OutputDirectory) {
  const auto dir = scratch_dir();
  ::setenv("OKSPHERE_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = run({"bounds", "--gamma", "0:1:3", "--out", "bounds.csv"});
  ::unsetenv("OKSPHERE_OUTPUT_DIR");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "bounds.csv"));
}

TEST(Cli, CriticalSolve) {
  const auto r = run({"critical", "solve", "--n", "3", "--gamma", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j.at("z")[2].get<double>(), 0.590631945662, 1e-10);
}

TEST(Cli, ContinuationJsonLines) {
  const auto r = run({"critical", "continue", "--n", "2", "--gamma-start", "0.1", "--gamma-end",
                      "1", "--steps", "3", "--init", "list", "--z", "-0.5,0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    EXPECT_TRUE(nlohmann::json::accept(line));
    ++lines;
  }
  EXPECT_EQ(lines, 5);  // meta + 4 points
}

TEST(Cli, OtherSubcommandsRun) {
  EXPECT_EQ(run({"xi", "--z", "-0.5,0.5", "--points", "5"}).code, kExitOk);
  EXPECT_EQ(run({"gamma-curve", "--branch", "4", "--z1", "0.55:0.75:5"}).code, kExitOk);
  EXPECT_EQ(run({"critical", "check-uniform", "--n", "5"}).code, kExitOk);
  EXPECT_EQ(run({"minimize", "--z", "-0.4,0.6", "--gamma", "5"}).code, kExitOk);
  EXPECT_EQ(run({"escape", "--z", "-0.5,0,0,0.5", "--gamma", "10"}).code, kExitOk);
  EXPECT_EQ(run({"stability", "--z", "-0.5,0.5", "--gamma", "0.5", "--K", "4"}).code, kExitOk);
}
