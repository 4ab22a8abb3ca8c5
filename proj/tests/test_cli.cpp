#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using tag5::testing::data_path;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = tag5::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string g(const std::string& name) { return data_path(name).string(); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tag5_cli_" + name);
}

}  // namespace

TEST(Cli, Validate) {
  const CliResult ok = run({"validate", g("g1.json")});
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("OK"), std::string::npos);
  const CliResult bad = run({"validate", g("invalid_two_wrapping_nodes.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("error"), std::string::npos);
  EXPECT_EQ(run({"validate", g("missing.json")}).status, 2);
}

TEST(Cli, Recognize) {
  EXPECT_EQ(run({"recognize", g("g1.json"), "a b c d"}).out, "ACCEPT\n");
  EXPECT_EQ(run({"recognize", g("g1.json"), "aabbccdd", "--chars"}).status, 0);
  const CliResult rej = run({"recognize", g("g1.json"), "aabbcd", "--chars"});
  EXPECT_EQ(rej.status, 1);
  EXPECT_EQ(rej.out, "REJECT\n");
  EXPECT_EQ(run({"recognize", g("g1.json"), "a,b,c,d", "--tokens", ","}).status, 0);
  EXPECT_EQ(run({"recognize", g("g1.json"), "abxd", "--chars"}).status, 2);
  EXPECT_EQ(run({"recognize", g("g1.json"), "abcd", "--engine", "baseline", "--chars"}).status, 0);
  EXPECT_EQ(run({"recognize", g("g1.json"), "abcd", "--engine", "other"}).status, 2);
}

TEST(Cli, RecognizeStats) {
  const CliResult r = run({"recognize", g("g1.json"), "aabbccdd", "--chars", "--stats"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("rule_applications"), std::string::npos);
  EXPECT_NE(r.out.find("wrap.full"), std::string::npos);
}

TEST(Cli, RecognizeRefusesInvalidGrammarUnlessBaseline) {
  const std::string bad = g("invalid_two_wrapping_nodes.json");
  const CliResult r = run({"recognize", bad, "abscd", "--chars"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("restricted"), std::string::npos);
  EXPECT_EQ(run({"recognize", bad, "abscd", "--chars", "--engine", "baseline"}).status, 0);
}

TEST(Cli, Transform) {
  const auto out = temp_file("transform.json");
  std::filesystem::remove(out);
  EXPECT_EQ(run({"transform", g("g1.json"), "-o", out.string()}).status, 0);
  std::ifstream f(out);
  std::stringstream written;
  written << f.rdbuf();
  std::ifstream golden(data_path("g1_transform.golden.json"));
  std::stringstream expect;
  expect << golden.rdbuf();
  EXPECT_EQ(written.str(), expect.str());

  const auto none = temp_file("invalid.json");
  std::filesystem::remove(none);
  EXPECT_EQ(run({"transform", g("invalid_left_admits_wrapping.json"), "-o", none.string()}).status,
            1);
  EXPECT_FALSE(std::filesystem::exists(none));
  EXPECT_NE(run({"transform", g("g2.json")}).out.find("left.L"), std::string::npos);
}

TEST(Cli, Compare) {
  const CliResult r = run({"compare", g("g1.json"), "--max-len", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("no differences"), std::string::npos);
  EXPECT_EQ(run({"compare", g("g1.json"), "--max-len", "13"}).status, 2);
  EXPECT_EQ(run({"compare", g("g1.json"), "--max-len", "12", "--sample", "100", "--seed", "4"}).status,
            0);
  EXPECT_EQ(run({"compare", g("g1.json")}).status, 2);
}

TEST(Cli, Bench) {
  const auto csv = temp_file("bench.csv");
  const CliResult r = run({"bench", g("g1.json"), "--lengths", "4,8,12", "--csv", csv.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("slope restricted"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(csv));
  EXPECT_EQ(run({"bench", g("g1.json"), "--lengths", "4,x"}).status, 2);
  EXPECT_EQ(run({"bench", g("g1.json"), "--lengths", "6"}).status, 2);
  EXPECT_EQ(run({"bench", g("g2.json"), "--lengths", "3,5", "--builder", "repeat:s"}).status, 0);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}
