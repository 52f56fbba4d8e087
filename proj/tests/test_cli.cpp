#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace detarr::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& env_seed = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, env_seed);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("detarr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST(Cli, ChordalComplete) {
  const Result r = run_cli({"chordal", "complete", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("chordal"), std::string::npos);
}

TEST_F(CliFiles, ChordalFourCycle) {
  const std::string c4 = write("c4.graph", "4\n1 2\n2 3\n3 4\n1 4\n");
  const Result text = run_cli({"chordal", c4});
  EXPECT_EQ(text.code, kExitNegative);
  EXPECT_NE(text.out.find("(1,2,3,4)"), std::string::npos);

  const Result r = run_cli({"--json", "chordal", c4});
  EXPECT_EQ(r.code, kExitNegative);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("chordal"), false);
  EXPECT_EQ(j.at("witness"), json({1, 2, 3, 4}));
  EXPECT_EQ(j.at("pdim_lower_bound"), 1);
}

TEST_F(CliFiles, BrokenGraphIsAnInputError) {
  const std::string broken = write("broken.graph", "5\n1 2\n0 5\n");
  const Result r = run_cli({"chordal", broken});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, MissingGraphFile) {
  EXPECT_EQ(run_cli({"chordal", "/nonexistent/g.graph"}).code, kExitInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"--mode", "fast", "saito", "complete", "3"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"saito", "complete", "3"}, "not-a-number").code, kExitInputError);
}

TEST(Cli, SaitoCompleteThree) {
  const Result r = run_cli({"--json", "saito", "complete", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("free"), true);
  EXPECT_EQ(j.at("saito").at("mode"), "symbolic");
  EXPECT_EQ(j.at("saito").at("basis"), true);
  EXPECT_EQ(j.at("saito").at("abs_c"), 1);
  EXPECT_EQ(j.at("derivations").size(), 6u);
}

TEST(Cli, SaitoCompleteFourText) {
  const Result r = run_cli({"saito", "complete", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verdict: basis"), std::string::npos);
  EXPECT_NE(r.out.find("method: symbolic (auto)"), std::string::npos);
}

TEST_F(CliFiles, SaitoRefusesOtherGraphs) {
  const std::string path3 = write("path3.graph", "3\n1 2\n2 3\n");
  const Result r = run_cli({"saito", path3});
  EXPECT_EQ(r.code, kExitOutOfScope);
  EXPECT_NE(r.err.find("complete graphs"), std::string::npos);
  EXPECT_EQ(run_cli({"saito", "complete", "2"}).code, kExitOutOfScope);
  EXPECT_EQ(run_cli({"--mode", "symbolic", "saito", "complete", "8"}).code, kExitOutOfScope);
  EXPECT_EQ(run_cli({"saito", "complete", "11"}).code, kExitOutOfScope);
}

TEST(Cli, SaitoRandomizedIsReproducible) {
  const std::vector<std::string> args{"--json", "--seed", "12345", "saito", "complete", "5"};
  const Result a = run_cli(args);
  const Result b = run_cli({"--json", "--threads", "4", "--seed", "12345", "saito", "complete", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j.at("saito").at("mode"), "randomized");
  EXPECT_EQ(j.at("saito").at("seed"), 12345);
  EXPECT_EQ(j.at("saito").at("determinant_degree"), 20);
  EXPECT_GE(j.at("saito").at("point_count").get<int>(), 33);

  // DETARR_SEED supplies the default; --seed wins over it.
  EXPECT_EQ(run_cli({"--json", "saito", "complete", "5"}, "12345").out, a.out);
  EXPECT_NE(run_cli({"--json", "saito", "complete", "5"}, "7").out, a.out);
  EXPECT_EQ(run_cli(args, "7").out, a.out);
}

TEST_F(CliFiles, Poincare) {
  const Result k4 = run_cli({"poincare", "complete", "4"});
  EXPECT_EQ(k4.code, kExitOk);
  EXPECT_NE(k4.out.find("(1+t^3)(1+t)^4(1+2t)"), std::string::npos);

  const std::string path3 = write("path3.graph", "3\n1 2\n2 3\n");
  const Result p = run_cli({"--json", "poincare", path3});
  ASSERT_EQ(p.code, kExitOk);
  const json j = json::parse(p.out);
  EXPECT_EQ(j.at("factored_text"), "(1+t^3)(1+t)^2");
  EXPECT_EQ(j.at("expanded"), json({1, 2, 1, 1, 2, 1}));
  EXPECT_EQ(j.at("linear_term_count"), 2);
  EXPECT_EQ(j.at("cubic_present"), true);
  EXPECT_EQ(j.at("homotopy").at("pi2"), "0");

  const std::string c5 = write("c5.graph", "5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  const Result bad = run_cli({"poincare", c5});
  EXPECT_EQ(bad.code, kExitNegative);
  EXPECT_NE(bad.err.find("(1,2,3,4,5)"), std::string::npos);
}

TEST_F(CliFiles, VerifyDerivations) {
  const std::string gamma = write("gamma.der", "y1*d/dy1 + y2*d/dy2 + y3*d/dy3\n");
  const Result r = run_cli({"--json", "verify", gamma, "complete", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("all_logarithmic"), true);
  for (const auto& e : j.at("results")[0].at("edges")) EXPECT_EQ(e.at("quotient"), "1");

  const std::string dx1 = write("dx1.der", "d/dx1\n");
  const std::string edge = write("edge.graph", "2\n1 2\n");
  EXPECT_EQ(run_cli({"verify", dx1, edge}).code, kExitNegative);

  std::string alpha;
  for (int k = 1; k <= 6; ++k) alpha += (k > 1 ? " + " : "") + std::string("x") + std::to_string(k) + "*d/dy" + std::to_string(k);
  const std::string alpha_file = write("alpha.der", alpha + "\n");
  const Result a = run_cli({"--json", "verify", alpha_file, "complete", "6"});
  ASSERT_EQ(a.code, kExitOk);
  const json aj = json::parse(a.out);
  EXPECT_EQ(aj.at("results")[0].at("edges").size(), 15u);
  for (const auto& e : aj.at("results")[0].at("edges")) EXPECT_EQ(e.at("quotient"), "0");

  const std::string broken = write("broken.der", "x1*d/dx1\nx1 +\n");
  EXPECT_EQ(run_cli({"verify", broken, "complete", "3"}).code, kExitInputError);
}

}  // namespace
}  // namespace detarr::cli
