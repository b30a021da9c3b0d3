#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ribbon/ribbon.hpp"

namespace fs = std::filesystem;
using ribbon::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ribbonfold-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildTruncatedOddWrap) {
  const auto r = call({"build", "--family", "odd-wrap", "--q", "3", "--presentation", "truncated", "-o", path("p.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto prog = ribbon::program_from_json(slurp(path("p.json")));
  EXPECT_EQ(prog.presentation, ribbon::Presentation::truncated);
  EXPECT_EQ(ribbon::layout(prog).panels.size(), 6u);
  EXPECT_EQ(call({"build", "--family", "odd-wrap", "--q", "3", "--presentation", "truncated"}).out,
            slurp(path("p.json")));
}

TEST_F(Cli, VerifyReportsRatio24) {
  const auto r = call({"verify", "--family", "rect74"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("24"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, VerifyAll) {
  const auto r = call({"verify", "--all"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, BoundsTable) {
  const auto r = call({"table", "--bounds"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c2_closed,(5/3)cot(π/5)"), std::string::npos);
}

TEST_F(Cli, TableAndFigure) {
  const auto r = call({"table", "--q-max", "6", "--p-max", "11", "-o", path("t.csv"), "--figure", path("t.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("t.csv")).rfind("family,p,q,presentation,ratio,crossing,quotient\n", 0), 0u);
  EXPECT_NE(slurp(path("t.svg")).find("<svg"), std::string::npos);
}

TEST_F(Cli, RenderAndIdentify) {
  ASSERT_EQ(call({"build", "--family", "star-polygon", "--p", "7", "-o", path("s.json")}).code, 0);
  const auto r = call({"render", "-i", path("s.json"), "-o", path("s.svg"), "--circumcircle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("s.svg")).rfind("<?xml", 0), 0u);
  const auto id = call({"identify", "-i", path("s.json")});
  EXPECT_EQ(id.code, 0) << id.err;
  EXPECT_NE(id.out.find("t^6 - t^5 + t^4 - t^3 + t^2 - t + 1"), std::string::npos);
  const auto js = call({"identify", "--family", "rect74", "--json"});
  EXPECT_EQ(js.code, 0);
  EXPECT_EQ(js.out.front(), '{');
}

TEST_F(Cli, ExitCodeMatrix) {
  ASSERT_EQ(call({"build", "--family", "odd-wrap", "--q", "3", "-o", path("o.json")}).code, 0);
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"verify", "--family", "pinwheel", "--q", "4"}, 0},
      {{"verify", "--family", "short-52", "--knot-check"}, 0},
      {{"identify", "--family", "even-wrap-plus2", "--q", "3"}, 0},
      {{"identify", "-i", path("o.json")}, 0},
      // Verification and certification failures.
      {{"verify", "--family", "odd-wrap", "--q", "7", "--tolerance", "1e-300"}, 1},
      {{"identify", "-i", path("o.json"), "--expect-p", "5", "--expect-q", "2"}, 1},
      // Usage and input errors.
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"build", "--family", "hexagon"}, 2},
      {{"build", "--family", "odd-wrap", "--q", "1"}, 2},
      {{"build", "--family", "star-polygon", "--p", "8"}, 2},
      {{"build", "--family", "star-polygon", "--p", "7", "--presentation", "truncated"}, 2},
      {{"build", "--family", "short-52", "--epsilon", "0.5"}, 2},
      {{"verify"}, 2},
      {{"verify", "--family", "rect74", "--tolerance", "-1"}, 2},
      {{"table", "--format", "xml"}, 2},
      {{"render", "-i", path("missing.json")}, 2},
      {{"identify", "--family", "odd-wrap", "--q", "3", "--presentation", "truncated"}, 2},
  };
  for (const auto& [args, expected] : cases) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    const auto r = call(args);
    EXPECT_EQ(r.code, expected) << joined << "\n" << r.err;
    if (expected == 2) EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST_F(Cli, MalformedInputLeavesNoOutputFile) {
  std::ofstream(path("bad.json")) << R"({"width": 1, "presentation": "closed", "creases": [)";
  const auto r = call({"render", "-i", path("bad.json"), "-o", path("bad.svg")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(path("bad.svg")));
  std::vector<std::string> left;
  for (const auto& e : fs::directory_iterator(dir_)) left.push_back(e.path().filename().string());
  EXPECT_EQ(left, std::vector<std::string>{"bad.json"});
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (int i = 0; i < 2; ++i) {
    const std::string n = std::to_string(i);
    ASSERT_EQ(call({"build", "--family", "pinwheel", "--q", "3", "-o", path("b" + n + ".json")}).code, 0);
    ASSERT_EQ(call({"render", "-i", path("b0.json"), "-o", path("r" + n + ".svg"), "--centerline"}).code, 0);
  }
  EXPECT_EQ(slurp(path("b0.json")), slurp(path("b1.json")));
  EXPECT_EQ(slurp(path("r0.svg")), slurp(path("r1.svg")));
  EXPECT_EQ(call({"identify", "-i", path("b0.json")}).out, call({"identify", "-i", path("b1.json")}).out);
}

TEST_F(Cli, ExecutableExitCodes) {
  const std::string exe = RIBBONFOLD_EXE;
  auto status = [&](const std::string& args) {
    const int s = std::system((exe + " " + args + " >" + path("stdout") + " 2>" + path("stderr")).c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("verify --family rect74"), 0);
  EXPECT_EQ(status("verify --family odd-wrap --q 7 --tolerance 1e-300"), 1);
  EXPECT_EQ(status("build --family nonsense"), 2);
}
