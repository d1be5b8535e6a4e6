#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "egk/io.hpp"

namespace egk {
namespace {

namespace fs = std::filesystem;
using io::Json;

const fs::path kData = EGK_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ::unsetenv("EGK_COLOR");
    dir_ = fs::temp_directory_path() / ("egk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, GameAnalyzeText) {
  const auto r = run({"game", "analyze", data("myerson.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1: A"), std::string::npos);
  EXPECT_NE(r.out.find("2: C"), std::string::npos);
}

TEST_F(CliTest, GameAnalyzeJson) {
  const auto r = run({"--json", "game", "analyze", data("myerson.json"), "--procedure", "iesds"});
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["survivors"]["1"], Json::array({"A", "B"}));
  EXPECT_TRUE(doc["trace"].empty());
  const Json df = Json::parse(run({"--json", "game", "analyze", data("myerson.json")}).out);
  ASSERT_EQ(df["trace"].size(), 1u);
  EXPECT_TRUE(df["trace"][0]["eliminated"][0]["dominator"]["A"].is_string());
}

TEST_F(CliTest, OrderedPipeline) {
  const std::string lrat_file = (dir_ / "lrat.json").string();
  ASSERT_EQ(run({"model", "lrat", data("example21.json"), "--event-out", lrat_file}).code, 0);
  const auto r = run({"--json", "model", "operators", data("example21.json"), "--op", "cb1", "--event", lrat_file});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["event"], Json::array({"w1"}));
  const auto cb = run({"--json", "model", "operators", data("example21.json"), "--op", "cb", "--event", lrat_file});
  EXPECT_TRUE(Json::parse(cb.out)["event"].empty());
}

TEST_F(CliTest, UpperOperators) {
  const auto r = run({"--json", "model", "operators", data("example31.json"), "--op", "cbeps", "--eps", "1/4",
                      "--worlds", "w1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["event"], Json::array({"w1"}));
  EXPECT_EQ(run({"model", "operators", data("example31.json"), "--op", "cbeps", "--eps", "1/2", "--worlds", "w1"}).code,
            2);
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(run({"model", "check", data("example21.json")}).code, 0);
  EXPECT_EQ(run({"model", "check", data("example31.json"), "--eps", "1/4"}).code, 0);
  const auto r = run({"model", "check", data("example31.json"), "--eps", "1/8"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("trembling"), std::string::npos);
}

TEST_F(CliTest, TypesAndConversion) {
  const Json t = Json::parse(run({"--json", "types", "analyze", data("example11_types.json")}).out);
  EXPECT_EQ(t["permissible"]["1"], Json::array({"A"}));
  EXPECT_EQ(run({"types", "analyze", data("example31_types.json")}).code, 2);
  EXPECT_EQ(run({"types", "analyze", data("example31_types.json"), "--eps", "1/4"}).code, 0);

  const std::string kripke = (dir_ / "k.json").string();
  ASSERT_EQ(run({"types", "to-kripke", data("example11_types.json"), "-o", kripke}).code, 0);
  EXPECT_EQ(run({"model", "check", kripke}).code, 0);
  const std::string types = (dir_ / "t.json").string();
  ASSERT_EQ(run({"model", "to-types", data("example31.json"), "-o", types}).code, 0);
  EXPECT_EQ(run({"types", "analyze", types, "--eps", "1/4"}).code, 0);
}

TEST_F(CliTest, ConvergeAndFamily) {
  const fs::path fam = dir_ / "family";
  const auto r = run({"--json", "converge", data("example21.json"), "--schedule", "geometric:1/2,5", "--emit-family",
                      fam.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["rows"].size(), 5u);
  for (int n = 0; n < 5; ++n) {
    const auto m = io::load_model(fam / ("eps_" + std::to_string(n) + ".json"));
    EXPECT_TRUE(m.probabilistic());
  }
  EXPECT_EQ(run({"converge", data("example31.json")}).code, 2);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"game", "analyze"}).code, 2);
  const auto r = run({"game", "analyze", (dir_ / "missing.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"game", "analyze", data("myerson.json"), "--procedure", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> args{"--json", "converge", data("example21.json")};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> text{"model", "check", data("example31.json"), "--eps", "1/8"};
  EXPECT_EQ(run(text).out, run(text).out);
}

TEST_F(CliTest, DotGrammar) {
  for (const char* f : {"example21.json", "example31.json"}) {
    const auto r = run({"export", "dot", data(f)});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "digraph kripke {");
    const std::regex stmt(R"(\s*(rankdir=\w+;|node \[.*\];|"[^"]+" \[label="[^"]*"\];|"[^"]+" -> "[^"]+" \[.*\];|\}))");
    int edges = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      EXPECT_TRUE(std::regex_match(line, stmt)) << line;
      edges += line.find("->") != std::string::npos;
    }
    EXPECT_EQ(edges, 16);
  }
}

TEST_F(CliTest, ColorOnlyWhenAsked) {
  const auto plain = run({"model", "check", data("example31.json"), "--eps", "1/8"});
  EXPECT_EQ(plain.out.find('\x1b'), std::string::npos);
  ::setenv("EGK_COLOR", "1", 1);
  const auto colored = run({"model", "check", data("example31.json"), "--eps", "1/8"});
  EXPECT_NE(colored.out.find('\x1b'), std::string::npos);
  ::setenv("EGK_COLOR", "never", 1);
  EXPECT_EQ(run({"model", "check", data("example31.json"), "--eps", "1/8"}).out.find('\x1b'), std::string::npos);
  ::unsetenv("EGK_COLOR");
}

}  // namespace
}  // namespace egk
