#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramseq/attention.hpp"
#include "ramseq/commands.hpp"
#include "ramseq/illustration.hpp"
#include "ramseq/rule_file.hpp"

using namespace ramseq;

namespace {

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

const std::string kRule = RAMSEQ_DATA_DIR "/illustration.json";

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, Reproduce) {
  const auto r = run({"reproduce"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all quantities match"), std::string::npos);
  EXPECT_EQ(run({"reproduce", "--csv"}).out.rfind("quantity,expected,computed", 0), 0U);
}

TEST(Cli, ReproduceDetectsPerturbedFixture) {
  const AttentionRule base = illustration_rule();
  const Universe& u = base.universe();
  std::vector<AttentionEntry> rows = base.entries();
  for (auto& e : rows) {
    if (e.menu == u.all() && e.subset == u.set_of({"A", "B"})) e.probability = 0.31;
    if (e.menu == u.all() && e.subset == u.set_of({"B", "D"})) e.probability = 0.39;
  }
  const AttentionRule perturbed = load_explicit(u, base.mode(), rows);
  std::ostringstream out;
  EXPECT_EQ(cli::reproduce(perturbed, out), cli::kDomainFailure);
  EXPECT_NE(out.str().find("MISMATCH"), std::string::npos);
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", kRule}).code, 0);
  const std::string bad = temp_file("ramseq_violator.json", R"({"alternatives":["a","b","c"],
    "utilities":{"a":3,"b":2,"c":1},"attention":[
      {"menu":["a","b","c"],"consider":["a"],"prob":0.5},
      {"menu":["a","b","c"],"consider":["a","b","c"],"prob":0.5},
      {"menu":["a","b"],"consider":["a"],"prob":0.2},
      {"menu":["a","b"],"consider":["a","b"],"prob":0.8},
      {"menu":["a","c"],"consider":["a","c"],"prob":1},
      {"menu":["b","c"],"consider":["b","c"],"prob":1}]})");
  const auto r = run({"validate", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("monotonicity violations"), std::string::npos);
  EXPECT_EQ(run({"validate", temp_file("ramseq_broken.json", "{ nope")}).code, 2);
  EXPECT_EQ(run({"validate", "/nonexistent.json"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"seq", kRule, "--order", "A,B,D", "--assoc", "middle"}).code, 2);
  EXPECT_EQ(run({"seq", kRule, "--order", "A,Z"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SeqAndCompare) {
  const auto seq = run({"seq", kRule, "--order", "A,B,D", "--assoc", "right", "--csv"});
  EXPECT_EQ(seq.code, 0);
  EXPECT_NE(seq.out.find("A,0.9\n"), std::string::npos);
  EXPECT_NE(seq.out.find("D,0.08\n"), std::string::npos);
  const auto cmp = run({"compare", kRule, "--order", "A,B,D", "--csv"});
  EXPECT_EQ(cmp.code, 0);
  EXPECT_NE(cmp.out.find("verdict,SEQ-dominant"), std::string::npos);
  EXPECT_NE(cmp.out.find("total variation,0.23"), std::string::npos);
}

TEST(Cli, IncompleteRuleIsDomainFailure) {
  const std::string partial = temp_file("ramseq_partial.json", R"({"alternatives":["a","b","c"],
    "utilities":{"a":3,"b":2,"c":1},"attention":[{"menu":["a","b","c"],"consider":["a","b","c"],"prob":1}]})");
  EXPECT_EQ(run({"seq", partial, "--order", "a,b,c"}).code, 1);
  EXPECT_EQ(run({"ram", partial, "--menu", "a,b,c"}).code, 0);
}

TEST(Cli, RamSweepAxiomsFormat) {
  const auto ram = run({"ram", kRule, "--menu", "A,B,D", "--csv"});
  EXPECT_NE(ram.out.find("A,0.6\n"), std::string::npos);
  const auto sweep = run({"sweep", "--p-grid", "0.7", "--n", "3", "--csv"});
  EXPECT_EQ(sweep.code, 0);
  EXPECT_NE(sweep.out.find("3,0.7,threshold,0.765286,0.765286,0.343,0.343,tie"), std::string::npos);
  const auto axioms = run({"axioms", kRule});
  EXPECT_EQ(axioms.code, 0);
  EXPECT_NE(axioms.out.find("pi(D|{A,D}) < pi(D|{A,B,D})"), std::string::npos);
  const auto fmt = run({"format", kRule});
  EXPECT_EQ(fmt.code, 0);
  EXPECT_EQ(parse_rule(fmt.out), illustration_rule());
}

TEST(Cli, SearchJsonIsDeterministic) {
  const std::vector<std::string> args{"search", "--trials", "50", "--seed", "5", "--json"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run(threaded);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"trials\": 50"), std::string::npos);
  EXPECT_EQ(run({"search", "--hypothesis", "amplification", "--universe", "2"}).code, 2);
}
