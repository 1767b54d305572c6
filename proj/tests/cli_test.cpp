#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace fiberkit::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"fiberkit"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fiberkit_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Classify, Examples) {
  auto r = invoke({"classify", "--loop", "trivial"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("component: Trivial"), std::string::npos);
  EXPECT_NE(r.out.find("endpoint: +1"), std::string::npos);

  r = invoke({"classify", "--loop", "gluck:0,0,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("component: Nontrivial"), std::string::npos);

  r = invoke({"classify", "--loop", "gluck-concat:(0,0,1);(0,0,-1)"});
  EXPECT_NE(r.out.find("component: Trivial"), std::string::npos);
}

TEST(Classify, Errors) {
  EXPECT_EQ(invoke({"classify", "--loop", "nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({"classify"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"classify", "--loop", "gluck:0,0,1", "--resolution", "4"}).code, kUsage);
}

TEST(Classify, ResolutionErrorIsNumerical) {
  // A loop file whose lift flips sign between samples.
  const auto path = temp_path("flip.json");
  std::ofstream(path) << R"({"n": 2, "samples": [[1,0,0,0], [-0.6,0.8,0,0], [1,0,0,0]]})";
  const auto r = invoke({"classify", "--loop", path});
  EXPECT_EQ(r.code, kNumerical);
  EXPECT_FALSE(r.err.empty());
  std::filesystem::remove(path);
}

TEST(FiberExport, TrivialIsRadialAndDeterministic) {
  const auto a = temp_path("a.obj");
  const auto b = temp_path("b.obj");
  EXPECT_EQ(invoke({"fiber-export", "--loop", "trivial", "--y-grid", "fib:8", "--out", a}).code, kOk);
  EXPECT_EQ(invoke({"fiber-export", "--loop", "trivial", "--y-grid", "fib:8", "--out", b}).code, kOk);
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  std::istringstream in(text);
  std::string line;
  int curves = 0;
  while (std::getline(in, line)) curves += line.rfind("l ", 0) == 0;
  EXPECT_EQ(curves, 8);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(FiberExport, JsonToStdout) {
  const auto r = invoke({"fiber-export", "--loop", "gluck:0,0,1", "--y-grid", "equator:2", "--format", "json",
                         "--fiber-res", "16"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"curves\""), std::string::npos);
  EXPECT_EQ(invoke({"fiber-export", "--format", "ply"}).code, kUsage);
  EXPECT_EQ(invoke({"fiber-export", "--loop", "gluck:0,0,1", "--fiber-res", "4"}).code, kNumerical);
}

TEST(Family, WriteAndReverify) {
  const auto path = temp_path("family_n.json");
  auto r = invoke({"family", "--component", "N", "--grid", "8x16", "--out", path, "--resolution", "64"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("114"), std::string::npos);
  r = invoke({"verify", "--family", path});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("PASS family/continuity"), std::string::npos);
  EXPECT_EQ(invoke({"family", "--component", "Q", "--out", path}).code, kUsage);
  std::filesystem::remove(path);
}

TEST(Verify, UnknownSuiteIsUsageError) {
  const auto r = invoke({"verify", "--suite", "no-such-suite"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("group-axioms"), std::string::npos);
}

TEST(Verify, GroupAxiomsPasses) {
  const auto r = invoke({"verify", "--suite", "group-axioms", "--seed", "7", "--trials", "20"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, DeterministicForSeed) {
  const auto a = invoke({"verify", "--suite", "james", "--seed", "3", "--trials", "10"});
  const auto b = invoke({"verify", "--suite", "james", "--seed", "3", "--trials", "10"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kOk);
}

TEST(Verify, FailureReportsReproduction) {
  // An impossible tolerance forces a failure.
  const auto r =
      invoke({"verify", "--suite", "group-axioms", "--seed", "5", "--trials", "2", "--algebra-tol", "-1"});
  EXPECT_EQ(r.code, kFailed);
  EXPECT_NE(r.out.find("reproduce: fiberkit verify --suite group-axioms --seed 5"), std::string::npos);
}

TEST(Verify, EverySuitePassesAtSmallScale) {
  for (const char* suite : {"trivialization", "phi", "aut-characterization", "classifier-oracle", "nullhomotopy"}) {
    const auto r = invoke({"verify", "--suite", suite, "--seed", "11", "--trials", "10"});
    EXPECT_EQ(r.code, kOk) << suite << "\n" << r.out;
  }
}

}  // namespace
}  // namespace fiberkit::cli
