#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hyperholo_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) const {
    const fs::path log = dir_ / "cli.log";
    const std::string cmd = std::string(HYPERHOLO_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return {WEXITSTATUS(status), slurp(log)};
  }

  fs::path write_config(const std::string& text) {
    const fs::path p = dir_ / "run.cfg";
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, ListGenerators) {
  const Result r = run("list-generators");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("prodform(S,T)"), std::string::npos);
}

TEST_F(CliTest, VerifyPassesAndWritesReports) {
  const fs::path cfg = write_config("generators = power:2; exp\nexpect_fail = conj\nwindow.count = 20\n");
  const Result r = run("verify --config " + cfg.string() + " --out " + (dir_ / "a").string() + " --no-timestamp");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "a" / "verify.jsonl"));
  const std::string csv = slurp(dir_ / "a" / "verify_summary.csv");
  EXPECT_EQ(csv.rfind("name,max_residual,tolerance,passed\n", 0), 0u);
  EXPECT_EQ(slurp(dir_ / "a" / "verify.jsonl").find("timestamp"), std::string::npos);
}

TEST_F(CliTest, FailingExpectationExitsOne) {
  const Result r = run("verify --generator radial --suite cr --out " + dir_.string() + " --no-timestamp");
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  Result r = run("verify --generator bogus:q --out " + dir_.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bogus"), std::string::npos) << r.out;
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify --frobnicate").code, 2);
  EXPECT_EQ(run("verify --config " + (dir_ / "missing.cfg").string()).code, 2);
  EXPECT_EQ(run("integral --generator prodform(exp,id) --out " + dir_.string()).code, 2);
}

TEST_F(CliTest, DeterministicWithoutTimestamp) {
  const fs::path cfg =
      write_config("generators = power:2\nregions = sphere(0,2,0,0,1)\nquadrature = 8,8,8,8\n"
                   "convergence = 8,8,8,8; 16,16,16,16\nwindow.count = 10\ngauss.fields = 2\n");
  for (const char* cmd : {"verify", "integral", "convergence", "gauss-selftest"}) {
    for (const char* sub : {"x", "y"}) {
      const Result r = run(std::string(cmd) + " --config " + cfg.string() + " --seed 5 --no-timestamp --out " +
                           (dir_ / sub).string());
      EXPECT_LE(r.code, 1) << cmd << r.out;
    }
  }
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "x")) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(dir_ / "y" / entry.path().filename())) << entry.path();
  }
  EXPECT_GE(files, 7);
}

}  // namespace
