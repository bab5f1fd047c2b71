#include <gtest/gtest.h>

#include <sstream>

#include "looplab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "looplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = looplab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string f; std::getline(is, f, sep);) v.push_back(f);
  return v;
}

}  // namespace

TEST(Cli, UsageErrors) {
  const Result a = run({"sample", "--bogus"});
  EXPECT_EQ(a.code, 1);
  EXPECT_FALSE(a.err.empty());
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"sample", "--level", "-1"}).code, 1);
  EXPECT_EQ(run({"affine", "--type", "Q"}).code, 1);
}

TEST(Cli, HelpListsCommands) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* c : {"sample", "identities", "roundtrip", "diag", "affine", "wiener", "invariance", "reparam"})
    EXPECT_NE(r.out.find(c), std::string::npos) << c;
}

TEST(Cli, HeaderCarriesConfig) {
  const Result r = run({"sample", "--n", "2", "--truncation", "2", "--seed", "5"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 4u);
  EXPECT_EQ(ls[0].rfind("# looplab 0.1.0 {", 0), 0u);
  EXPECT_NE(ls[0].find("\"seed\":5"), std::string::npos);
}

TEST(Cli, IdentitiesGate) {
  const Result r = run({"identities", "--level", "0", "--m", "64", "--trials", "20", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  double worst = 0.0;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#' || l[0] == 't') continue;
    worst = std::max(worst, std::stod(split(l, ',').back()));
  }
  EXPECT_LT(worst, 1e-6);
  // An impossible tolerance makes the gate fail with exit 2.
  EXPECT_EQ(run({"identities", "--trials", "3", "--tol", "0"}).code, 2);
}

TEST(Cli, AffineA1ZetaExponents) {
  const Result r = run({"affine", "--type", "A", "--rank", "1", "--level", "0", "--horizon", "16"});
  ASSERT_EQ(r.code, 0);
  int count = 0;
  for (const auto& l : lines(r.out)) {
    const auto f = split(l, ',');
    if (f.size() < 6 || f[0] != "zeta") continue;
    EXPECT_EQ(std::stoi(f[5]), 2 * std::stoi(f[1]));
    ++count;
  }
  EXPECT_EQ(count, 16);
}

TEST(Cli, OutputIndependentOfWorkers) {
  const Result a = run({"roundtrip", "--trials", "6", "--seed", "3", "--workers", "1"});
  const Result b = run({"roundtrip", "--trials", "6", "--seed", "3", "--workers", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result c = run({"diag", "--n", "2000", "--truncation", "16", "--seed", "3", "--workers", "1", "--lambda", "0.5"});
  const Result d = run({"diag", "--n", "2000", "--truncation", "16", "--seed", "3", "--workers", "2", "--lambda", "0.5"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, JsonFormat) {
  const Result r = run({"affine", "--type", "G", "--rank", "2", "--horizon", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"reduced_word\""), std::string::npos);
}

TEST(Cli, ReparamRotationGate) {
  const Result r = run({"reparam", "--sigma", "rotation", "--param", "0.9", "--n", "40", "--truncation", "3", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# summary"), std::string::npos);
}
