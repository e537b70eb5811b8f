#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "wecopt/errors.hpp"
#include "wecopt/optimize/trace_io.hpp"

namespace wecopt::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = WECOPT_TEST_DATA;
const fs::path kGolden = WECOPT_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wecopt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wecopt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Out() const { return (dir_ / "out").string(); }

  fs::path dir_;
};

std::string Data(const char* name) { return (kData / name).string(); }

TEST_F(CliTest, EvaluateReferenceDesign) {
  const Result r = Invoke({"evaluate", Data("reference_design.txt"), "--climate",
                           Data("single_state.csv"), "--out", Out()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Slurp(kGolden / "evaluate_reference.txt"));
  const Result again = Invoke({"evaluate", Data("reference_design.txt"), "--climate",
                               Data("single_state.csv"), "--out", Out()});
  EXPECT_EQ(again.out, r.out);
  const std::string log = Slurp(dir_ / "out" / "evaluations.jsonl");
  EXPECT_EQ(std::count(log.begin(), log.end(), '\n'), 2);
  EXPECT_GT(nlohmann::json::parse(log.substr(0, log.find('\n')))["p_aap_w"].get<double>(), 0.0);
}

TEST_F(CliTest, InvalidInputExitsWithTwo) {
  EXPECT_EQ(Invoke({"evaluate", Data("oversized_design.txt"), "--climate",
                    Data("single_state.csv"), "--out", Out()}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"evaluate", Data("reference_design.txt"), "--climate",
                    Data("toy_climate.csv"), "--out", Out()}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"evaluate", Data("reference_design.txt"), "--out", Out()}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"optimise", "--climate", Data("toy_climate.csv"), "--algo", "GA",
                    "--out", Out()}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"optimise", "--climate", Data("toy_climate.csv"), "--budget", "0",
                    "--out", Out()}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"optimise", "--bogus"}).code, kExitInvalidInput);
  EXPECT_EQ(Invoke({}).code, kExitInvalidInput);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SmokeCampaignEmitsOneTracePerAlgorithm) {
  const Result r = Invoke({"optimise", "--climate", Data("toy_climate.csv"), "--budget", "50",
                           "--repeats", "1", "--algo", "all", "--out", Out()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t traces = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "out" / "traces")) {
    ++traces;
    EXPECT_EQ(LoadTraceCsv(e.path()).size(), 50u);
  }
  EXPECT_EQ(traces, 6u);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  const std::string config = Data("campaign.json");
  Result r = Invoke({"optimise", "--config", config, "--out", Out()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LoadTraceCsv(dir_ / "out" / "traces" / "power_DE_seed100.csv").size(), 30u);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "traces" / "power_PSO_seed101.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "traces" / "power_CMAES_seed100.csv"));

  r = Invoke({"optimise", "--config", config, "--budget", "40", "--algo", "DE",
              "--objective", "lcoe", "--out", Out()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LoadTraceCsv(dir_ / "out" / "traces" / "lcoe_DE_seed100.csv").size(), 40u);
}

TEST_F(CliTest, SummaryMediansRecomputeFromTraces) {
  const Result r = Invoke({"optimise", "--climate", Data("toy_climate.csv"), "--budget", "40",
                           "--repeats", "5", "--algo", "DE,CMAES", "--seed", "7", "--jobs",
                           "2", "--out", Out()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* algo : {"DE", "CMAES"}) {
    std::vector<double> finals;
    for (int s = 7; s < 12; ++s) {
      const auto trace = LoadTraceCsv(dir_ / "out" / "traces" /
                                      ("power_" + std::string(algo) + "_seed" + std::to_string(s) + ".csv"));
      finals.push_back(trace.back());
    }
    const BoxStats expected = ComputeBoxStats(finals);
    const auto summary = nlohmann::json::parse(
        Slurp(dir_ / "out" / "summaries" / ("power_" + std::string(algo) + ".json")));
    EXPECT_EQ(summary["repeats"].get<int>(), 5);
    EXPECT_EQ(summary["stats"]["median"].get<double>(), expected.median);
    EXPECT_EQ(summary["stats"]["q1"].get<double>(), expected.q1);
    EXPECT_EQ(summary["stats"]["max"].get<double>(), expected.max);
  }
}

TEST_F(CliTest, TracesAreByteIdenticalAcrossRunsAndJobCounts) {
  const std::vector<std::string> base{"optimise", "--climate", Data("toy_climate.csv"),
                                      "--budget", "60", "--repeats", "2", "--algo", "all"};
  auto a = base;
  a.insert(a.end(), {"--out", (dir_ / "a").string(), "--jobs", "1"});
  auto b = base;
  b.insert(b.end(), {"--out", (dir_ / "b").string(), "--jobs", "3"});
  const Result ra = Invoke(a), rb = Invoke(b);
  ASSERT_EQ(ra.code, kExitOk);
  ASSERT_EQ(rb.code, kExitOk);
  EXPECT_EQ(ra.out, rb.out);
  for (const auto& e : fs::directory_iterator(dir_ / "a" / "traces")) {
    EXPECT_EQ(Slurp(e.path()), Slurp(dir_ / "b" / "traces" / e.path().filename()))
        << e.path().filename();
  }
  EXPECT_EQ(Slurp(dir_ / "a" / "traces" / "power_DE_seed0.csv"),
            Slurp(kGolden / "power_DE_seed0.csv"));
}

TEST_F(CliTest, SweepGridRowsAndGolden) {
  const std::vector<std::string> args{
      "sweep", "--config", Data("campaign.json"), "--radii", "6,9", "--aspects", "0.5,1.2",
      "--budget", "50", "--out", Out()};
  const Result r = Invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_EQ(r.out, Slurp(dir_ / "out" / "surfaces" / "power_seed100.csv"));
  EXPECT_EQ(r.out, Slurp(kGolden / "sweep_surface.csv"));
  // Rerunning one node reproduces its row.
  const Result one = Invoke({"sweep", "--config", Data("campaign.json"), "--radii", "9",
                             "--aspects", "1.2", "--budget", "50", "--out", Out()});
  const std::string last_row = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  EXPECT_EQ(one.out.substr(one.out.find('\n') + 1), last_row);
}

TEST_F(CliTest, FailedSweepNodeExitsWithOne) {
  const Result r = Invoke({"sweep", "--config", Data("campaign.json"), "--radii", "6,25",
                           "--aspects", "1", "--budget", "20", "--out", Out()});
  EXPECT_EQ(r.code, kExitPartialFailure);
  EXPECT_NE(r.out.find("25,1,nan,0"), std::string::npos);
  EXPECT_NE(r.err.find("failed"), std::string::npos);
}

TEST(Campaign, CrashingRunsAreRecorded) {
  std::size_t calls = 0;
  const Objective flaky = [&](std::span<const double> x) -> double {
    ++calls;
    if (x[0] > 0.5) throw NumericalError(1.0, "singular impedance");
    return x[0];
  };
  const Bounds box(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 1.0});
  OptimiserConfig base;
  base.budget = 100;
  const auto runs = RunCampaign({Algorithm::kDe, Algorithm::kNelderMead}, 3, 0, base, flaky, box, 1);
  ASSERT_EQ(runs.size(), 6u);
  std::size_t failed = 0;
  for (const auto& r : runs) failed += r.failed;
  EXPECT_GT(failed, 0u);
  EXPECT_GT(calls, 6u);
  EXPECT_EQ(runs[3].algorithm, Algorithm::kNelderMead);
  EXPECT_EQ(runs[4].seed, 1u);
}

}  // namespace
}  // namespace wecopt::cli
