#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> words) {
  words.insert(words.begin(), "varpi");
  std::vector<const char*> argv;
  for (const auto& w : words) argv.push_back(w.c_str());
  std::ostringstream out, err;
  varpi::cli::CliConfig config;
  if (auto stop = varpi::cli::parse(static_cast<int>(argv.size()), argv.data(), config, out, err))
    return {*stop, out.str(), err.str()};
  const int status = varpi::cli::run(config, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RankAndUnrank) {
  auto r = invoke({"unrank", "--n", "5", "84"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "51324\n");
  r = invoke({"rank", "42315"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "35\t0130\n");
  r = invoke({"rank", "--n", "4", "4321", "--format", "tsv"});
  EXPECT_EQ(r.out, "23\t123_w\t4321\n");
  r = invoke({"code", "--n", "5", "84"});
  EXPECT_EQ(r.out, "1104\n");
}

TEST(Cli, RankOrderMismatch) {
  const auto r = invoke({"rank", "--n", "5", "4321"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, ListFormats) {
  auto r = invoke({"list", "--n", "3"});
  EXPECT_EQ(r.out, "123\n231\n312\n213\n132\n321\n");
  r = invoke({"list", "--n", "4", "--range", "16..19", "--format", "tsv"});
  EXPECT_EQ(r.out, "16\t110_w\t1324\n17\t111_w\t3241\n18\t112_w\t2413\n19\t113_w\t4132\n");
  r = invoke({"list", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[5]["perm"], "321");
}

TEST(Cli, MirrorRulerWords) {
  EXPECT_EQ(invoke({"mirror", "--n", "5", "84"}).out, "35\t42315\n");
  EXPECT_EQ(invoke({"ruler", "--n", "4", "--format", "runlength"}).out, "1^3 2 1^3 2 1^3 3 1^3 2 1^3 2 1^3\n");
  EXPECT_EQ(invoke({"palindrome", "--n", "3"}).out, "123231312213132321\n");
  EXPECT_EQ(invoke({"superperm", "--n", "3"}).out, "123121321\n");
}

TEST(Cli, GraphAndMinpath) {
  auto r = invoke({"graph", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 18u);
  r = invoke({"graph", "--n", "2"});
  EXPECT_EQ(r.out.rfind("digraph G2 {", 0), 0u);
  r = invoke({"minpath", "--n", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("29"), std::string::npos);
  r = invoke({"minpath", "--n", "5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("148"), std::string::npos);
  EXPECT_NE(r.out.find("152"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"unrank", "--n", "4", "24"}).status, 1);
  EXPECT_EQ(invoke({"frobnicate"}).status, 1);
  EXPECT_EQ(invoke({"unrank", "84"}).status, 1);
  EXPECT_EQ(invoke({"list", "--n", "3", "--format", "dot"}).status, 1);
  EXPECT_EQ(invoke({"palindrome", "--n", "12"}).status, 2);
  EXPECT_EQ(invoke({"graph", "--n", "9"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--n", "4", "--suite", "nosuch"}).status, 1);
}

TEST(Cli, VerifyPasses) {
  const auto r = invoke({"verify", "--n", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS identities"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> cmd{"list", "--n", "5", "--format", "tsv"};
  EXPECT_EQ(invoke(cmd).out, invoke(cmd).out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "varpi_cli_output.txt";
  const auto r = invoke({"list", "--n", "3", "--output", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "123\n231\n312\n213\n132\n321\n");
  std::filesystem::remove(path);
}
