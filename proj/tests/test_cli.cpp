#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graysurf/cli.hpp"

namespace fs = std::filesystem;
using graysurf::cli::Json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "graysurf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = graysurf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("graysurf_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string out(const std::string& sub = "") const { return (dir_ / sub).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenusFamilyWritesReports) {
  const Result r = run_cli({"--genus", "2", "--k", "1", "--x", "0.5", "--out", out(), "family"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(dir_ / "profile.csv");
  EXPECT_EQ(count_lines(csv), 2050u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,H,F,G,dF,dG,lambda0,lambda1,lambda2,tau");
  const Json j = Json::parse(slurp(dir_ / "report.json"));
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["boundary"]["passed"].get<bool>());
  EXPECT_TRUE(j["ac"]["passed"].get<bool>());
  EXPECT_FALSE(fs::exists(dir_ / "profile.svg"));
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, Cp2FamiliesPass) {
  EXPECT_EQ(run_cli({"--cp2", "--x", "0.5", "--out", out("a"), "family"}).code, 0);
  EXPECT_EQ(run_cli({"--cp2", "--x", "1.5", "--eps", "-1", "--out", out("b"), "family"}).code, 0);
}

TEST_F(CliTest, Cp2BelowEtaIsRejected) {
  const Result r = run_cli({"--cp2", "--x", "-0.9", "--out", out(), "family"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("eta"), std::string::npos) << r.err;
}

TEST_F(CliTest, InvalidInputs) {
  EXPECT_EQ(run_cli({"--genus", "0", "--out", out(), "family"}).code, 2);
  EXPECT_EQ(run_cli({"--formats", "xml", "--out", out(), "family"}).code, 2);
  EXPECT_EQ(run_cli({"--n", "8", "--out", out(), "family"}).code, 2);
  EXPECT_EQ(run_cli({"--cp2", "--eps", "0", "--out", out(), "family"}).code, 2);
  EXPECT_EQ(run_cli({"--x", "1.5", "--out", out(), "family"}).code, 2);
  EXPECT_EQ(run_cli({"--bogus", "family"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST_F(CliTest, HelpAndVersion) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  const Result v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(graysurf::version), std::string::npos);
}

TEST_F(CliTest, ScanFindsNothing) {
  const Result r = run_cli({"--grid", "2000", "--sweep", "20", "--out", out(), "scan"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = Json::parse(slurp(dir_ / "scan.json"));
  ASSERT_EQ(j["cases"].size(), 2u);
  for (const auto& c : j["cases"]) EXPECT_FALSE(c["found_solution"].get<bool>());
  EXPECT_TRUE(j["cases"][1]["factor_roots_above_1"].empty());
  EXPECT_EQ(j["sweep"]["antidiagonal_max_abs_residual"].get<double>(), 0.0);
  EXPECT_GT(j["sweep"]["max_abs_residual"].get<double>(), 0.0);
  EXPECT_EQ(count_lines(slurp(dir_ / "sweep.csv")), 401u);
  EXPECT_EQ(count_lines(slurp(dir_ / "sweep_antidiagonal.csv")), 21u);
}

TEST_F(CliTest, VerifyPassesAndPerturbationFails) {
  const Result good = run_cli({"--seed", "7", "--count", "30", "--out", out("a"), "verify"});
  EXPECT_EQ(good.code, 0) << good.out << good.err;
  const Json j = Json::parse(slurp(dir_ / "a" / "verify.json"));
  EXPECT_TRUE(j["passed"].get<bool>());
  const Result bad =
      run_cli({"--seed", "7", "--count", "30", "--perturb", "0.01", "--out", out("b"), "verify"});
  EXPECT_EQ(bad.code, 3) << bad.out << bad.err;
}

TEST_F(CliTest, ReportsAreByteIdentical) {
  for (const char* sub : {"a", "b"}) {
    ASSERT_EQ(run_cli({"--x", "0.8", "--k", "3", "--formats", "csv,json,svg", "--out", out(sub),
                       "family"})
                  .code,
              0);
    ASSERT_EQ(run_cli({"--seed", "3", "--count", "9", "--out", out(sub), "verify"}).code, 0);
  }
  for (const char* f : {"report.json", "profile.csv", "profile.svg", "spectrum.svg", "verify.json"})
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
}

TEST_F(CliTest, SvgOutputs) {
  ASSERT_EQ(run_cli({"--formats", "svg", "--out", out(), "family"}).code, 0);
  const std::string svg = slurp(dir_ / "spectrum.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "profile.svg"));
  EXPECT_FALSE(fs::exists(dir_ / "profile.csv"));
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  const fs::path cfg = dir_ / "run.ini";
  std::ofstream(cfg) << "genus = 1\nk = 1\nx = 0.3\nformats = json\n";
  const Result r = run_cli({"--config", cfg.string(), "--x", "0.4", "--out", out(), "family"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(slurp(dir_ / "report.json"));
  EXPECT_EQ(j["config"]["genus"].get<int>(), 1);
  EXPECT_EQ(j["config"]["x"].get<double>(), 0.4);
  EXPECT_FALSE(j["config"].contains("out"));
}

TEST_F(CliTest, UnusableOutputDirectoryIsRejected) {
  const fs::path file = dir_ / "occupied";
  std::ofstream(file) << "x";
  const Result r = run_cli({"--out", file.string(), "family"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("output"), std::string::npos) << r.err;
}
