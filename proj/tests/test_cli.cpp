#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "liftaut/cli.hpp"
#include "support.hpp"

using namespace liftaut;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "liftaut");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return support::fixture_path(name); }

}  // namespace

TEST(Cli, SolveCyclicOrder4) {
  const auto r = run_cli({"solve", fx("c4.pres"), fx("id1.phi")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "homomorphic");
  EXPECT_EQ(j["lift_count"], 2);
  EXPECT_EQ(j["lifts"][0]["images"], json::array({"x"}));
  EXPECT_EQ(j["lifts"][1]["images"], json::array({"x^-1"}));
  EXPECT_EQ(j["matrix"], json::parse(R"([["4"]])"));
  EXPECT_EQ(j["moduli"], json::parse(R"(["2"])"));
}

TEST(Cli, AutoReportsAutomorphicLifts) {
  for (const auto& pres : {"c6_x2.pres", "c4.pres"}) {
    const auto r = run_cli({"auto", fx(pres), fx("id1.phi")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["kind"], "automorphic");
    EXPECT_EQ(j["lift_count"], 2);
    for (const auto& l : j["lifts"]) EXPECT_TRUE(l["automorphic"].get<bool>());
  }
}

TEST(Cli, ExistenceOnly) {
  auto r = run_cli({"auto", fx("c6_x2.pres"), fx("id1.phi"), "--existence-only"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["lift_exists"], true);
  EXPECT_FALSE(j.contains("lifts"));
  r = run_cli({"auto", fx("c4_full.pres"), fx("c6_trivial.phi"), "--existence-only"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotSquarefree"), std::string::npos);
}

TEST(Cli, NoLiftExitsTwo) {
  const auto r = run_cli({"solve", fx("c2c4.pres"), fx("c2c4_swap.phi")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["lifts"], json::array());
}

TEST(Cli, MalformedWordNamesLine) {
  const auto r = run_cli({"solve", fx("c4.pres"), fx("bad_word.phi")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_NE(r.err.find("MalformedExponent"), std::string::npos);
}

TEST(Cli, MissingFileAndBadFlags) {
  EXPECT_EQ(run_cli({"solve", fx("nope.pres"), fx("id1.phi")}).code, 1);
  EXPECT_EQ(run_cli({"solve", fx("c4.pres"), fx("id1.phi"), "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
}

TEST(Cli, VerifyCorpus) {
  for (const auto& name : support::corpus()) {
    const auto r = run_cli({"verify", fx(name)});
    EXPECT_EQ(r.code, 0) << name << r.err;
    EXPECT_EQ(json::parse(r.out)["match"], true) << name;
  }
}

TEST(Cli, VerifySinglePhi) {
  const auto r = run_cli({"verify", fx("q8.pres"), fx("q8_cycle.phi"), "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1 phi(s), all match"), std::string::npos);
}

TEST(Cli, InjectedFaultExitsThree) {
  const auto r = run_cli({"verify", fx("q8.pres"), "--inject-fault"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("counterexample"), std::string::npos);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["match"], false);
  EXPECT_FALSE(j["comparisons"][0]["counterexample"].is_null());
}

TEST(Cli, BudgetTooSmall) {
  const auto r = run_cli({"verify", fx("metacyclic_x3.pres"), "--lift-budget", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
}

TEST(Cli, DemoRejectsBadParameters) {
  auto r = run_cli({"demo", "--p", "2", "--n", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("p must be odd"), std::string::npos);
  r = run_cli({"demo", "--p", "3", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("n must be >= 4"), std::string::npos);
}

TEST(Cli, DemoArtifact) {
  const auto r = run_cli({"demo", "--p", "3", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["order_A"], 162);
  EXPECT_EQ(j["order_Z"], 9);
  EXPECT_EQ(j["order_Aut_A_mod_Z"], 432);
  EXPECT_EQ(j["hom_lift_counts"].size(), 432u);
  for (const auto& c : j["hom_lift_counts"]) EXPECT_EQ(c, 3);
  EXPECT_EQ(j["witness"]["psi_moves_Inn_G"], true);
}

TEST(Cli, JsonIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto phi = (dir / "liftaut_heis_id.phi").string();
  std::ofstream(phi) << "image: x\nimage: y\n";
  const auto a = run_cli({"auto", fx("heisenberg.pres"), phi});
  const auto b = run_cli({"auto", fx("heisenberg.pres"), phi});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto c = run_cli({"verify", fx("metacyclic_x9.pres")});
  const auto d = run_cli({"verify", fx("metacyclic_x9.pres")});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "liftaut_out.json").string();
  std::filesystem::remove(path);
  const auto r = run_cli({"solve", fx("c4.pres"), fx("id1.phi"), "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["lift_count"], 2);
}
