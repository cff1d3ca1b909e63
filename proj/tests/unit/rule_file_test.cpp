#include <gtest/gtest.h>

#include <fstream>

#include "ramseq/illustration.hpp"
#include "ramseq/result_table.hpp"
#include "ramseq/rule_file.hpp"

using namespace ramseq;

TEST(RuleFile, IllustrationDocumentMatchesDataFile) {
  const AttentionRule from_file = read_rule_file(RAMSEQ_DATA_DIR "/illustration.json");
  EXPECT_EQ(from_file, illustration_rule());
  EXPECT_EQ(parse_rule(illustration_document()), illustration_rule());
}

TEST(RuleFile, WriteParseRoundTrip) {
  const Universe u{{"p", 1}, {"q", 4}, {"r", 2}, {"s", 3}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AttentionRule rule = random_monotone_rule(u, seed);
    const std::string text = write_rule(rule);
    EXPECT_EQ(parse_rule(text), rule);
    EXPECT_EQ(write_rule(parse_rule(text)), text);
  }
  const AttentionRule nc = independent_attention(u, 0.4, EmptySetMode::no_choice);
  EXPECT_EQ(parse_rule(write_rule(nc)), nc);
}

TEST(RuleFile, Errors) {
  EXPECT_THROW(parse_rule("{"), ParseError);
  EXPECT_THROW(parse_rule("[]"), ParseError);
  EXPECT_THROW(parse_rule(R"({"alternatives":["a"],"utilities":{"a":1,"b":2},"attention":[]})"), ParseError);
  EXPECT_THROW(parse_rule(R"({"alternatives":["a","b"],"utilities":{"a":1,"b":2},
      "attention":[{"menu":["a","z"],"consider":["a"],"prob":1}]})"),
               ParseError);
  EXPECT_THROW(parse_rule(R"({"alternatives":["a","b"],"utilities":{"a":1,"b":2},"mode":"skip",
      "attention":[]})"),
               ParseError);
  EXPECT_THROW(parse_rule(R"({"alternatives":["a","b"],"utilities":{"a":1,"b":2},
      "attention":[{"menu":["a","b"],"consider":["a"],"prob":"half"}]})"),
               ParseError);
  EXPECT_THROW(read_rule_file("/nonexistent/rule.json"), ParseError);
}

TEST(RuleFile, ModeDefaultsToRenormalize) {
  const auto rule = parse_rule(R"({"alternatives":["a","b"],"utilities":{"a":2,"b":1},
      "attention":[{"menu":["a","b"],"consider":["a","b"],"prob":1}]})");
  EXPECT_EQ(rule.mode(), EmptySetMode::renormalize);
  const auto nc = parse_rule(R"({"alternatives":["a","b"],"utilities":{"a":2,"b":1},"mode":"no-choice",
      "attention":[{"menu":["a","b"],"consider":[],"prob":1}]})");
  EXPECT_EQ(nc.mode(), EmptySetMode::no_choice);
}

TEST(ResultTable, TextAndCsv) {
  ResultTable t({"name", "value"}, "title");
  t.add_row({std::string("x"), 0.1 + 0.2});
  t.add_row({std::string("a,b"), -0.0});
  EXPECT_EQ(t.str(ResultTable::Format::csv, false), "name,value\nx,0.3\n\"a,b\",0\n");
  EXPECT_EQ(t.str(ResultTable::Format::csv, true), "name,value\nx,0.3\n\"a,b\",0\n");
  EXPECT_EQ(t.str(ResultTable::Format::text, false),
            "title\nname  value\n-----------\nx     0.3\na,b   0\n");
  EXPECT_THROW(t.add_row({std::string("only")}), std::exception);
  EXPECT_EQ(ResultTable::format_number(0.30000000000000004, 17), "0.30000000000000004");
  EXPECT_EQ(ResultTable::format_number(0.7652855797503654, 6), "0.765286");
}
