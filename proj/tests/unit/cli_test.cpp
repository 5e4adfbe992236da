#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = uflip::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (auto p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
  return n;
}

TEST(Cli, FamiliesOfB2) {
  const auto r = run({"families", "--type", "B", "--rank", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("count"), 3);
  EXPECT_EQ(j.at("unipotent"), 6);
  const auto p = run({"families", "--type", "B", "--rank", "2", "--format", "pretty"});
  EXPECT_NE(p.out.find("3 families, 6 unipotent representations"), std::string::npos);
  EXPECT_NE(p.out.find("0   2\n  1\n"), std::string::npos);
}

TEST(Cli, DegreesOfTheB2Family) {
  const auto r = run({"degrees", "--type", "B", "--rank", "2", "--family", "1", "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count(r.out, "\n"), 5);
  EXPECT_EQ(count(r.out, "\t1/2*u^3 + 1/2*u\t"), 2);
  EXPECT_EQ(count(r.out, "\t1/2*u^3 + u^2 + 1/2*u\t"), 1);
  EXPECT_EQ(count(r.out, "\t1/2*u^3 - u^2 + 1/2*u\t"), 1);
}

TEST(Cli, VerifyEverythingInB4) {
  const auto r = run({"verify", "--all", "--type", "B", "--rank", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_TRUE(j.at("checks").at("hecke").contains("skipped"));
  const auto lifted = run({"verify", "--hecke", "--type", "B", "--rank", "3"});
  EXPECT_EQ(lifted.code, 0) << lifted.out;
}

TEST(Cli, OutputIsByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"families", "--type", "D", "--rank", "6"},
           {"involution", "--type", "F4"},
           {"expand", "--type", "G2", "--format", "tsv"},
           {"expand", "--type", "B", "--rank", "3", "--w0-sums"},
           {"symbol", "--type", "D", "--rank", "4", "--format", "pretty"},
           {"hecke-check", "--type", "G2"},
           {"dump-tables", "--what", "pairing", "--gamma", "S4"},
           {"dump-tables", "--type", "F4", "--what", "characters", "--format", "tsv"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args[0] << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, JsonKeysAreSorted) {
  const auto r = run({"involution", "--type", "B", "--rank", "3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"families"}).code, 2);
  EXPECT_EQ(run({"families", "--type", "E", "--rank", "6"}).code, 2);
  EXPECT_EQ(run({"families", "--type", "D", "--rank", "5"}).code, 2);
  EXPECT_EQ(run({"families", "--type", "B"}).code, 2);
  EXPECT_EQ(run({"families", "--type", "B", "--rank", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"symbol", "--type", "G2"}).code, 2);
  EXPECT_EQ(run({"degrees", "--type", "B", "--rank", "2", "--family", "9"}).code, 2);
  EXPECT_EQ(run({"expand", "--type", "B", "--rank", "2", "--word", "1,x"}).code, 2);
  EXPECT_EQ(run({"expand", "--type", "B", "--rank", "2", "--word", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "B", "--rank", "2"}).code, 2);
  EXPECT_EQ(run({"hecke-check", "--type", "B", "--rank", "4"}).code, 2);
  EXPECT_EQ(run({"dump-tables", "--what", "pairing", "--gamma", "S7"}).code, 2);
  EXPECT_EQ(run({"dump-tables", "--type", "B", "--rank", "2", "--what", "exceptional"}).code, 2);
  const auto r = run({"hecke-check", "--type", "B", "--rank", "4"});
  EXPECT_NE(r.err.find("rank gate"), std::string::npos);
}

TEST(Cli, GateCanBeLifted) {
  const auto r = run({"hecke-check", "--type", "B", "--rank", "2", "--hecke-rank-gate", "2", "--v0", "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("checks").at("spectrum").at("v0"), "5/1");
  EXPECT_EQ(run({"hecke-check", "--type", "B", "--rank", "3", "--hecke-rank-gate", "2"}).code, 2);
}

TEST(Cli, ExceptionalDataDump) {
  const auto r = run({"dump-tables", "--type", "F4", "--what", "exceptional"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("pass").get<bool>());
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hecke-check"), std::string::npos);
}

}  // namespace
