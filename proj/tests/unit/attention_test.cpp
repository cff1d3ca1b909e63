#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "ramseq/attention.hpp"
#include "ramseq/error.hpp"
#include "ramseq/illustration.hpp"

using namespace ramseq;

namespace {

Universe abc() { return Universe{{"a", 3}, {"b", 2}, {"c", 1}}; }

}  // namespace

TEST(Attention, IllustrationRuleIsValid) {
  const AttentionRule rule = illustration_rule();
  const ValidationReport r = validate(rule);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.is_monotone);
  EXPECT_TRUE(r.is_complete);
  EXPECT_GT(r.comparisons, 0U);
  EXPECT_TRUE(oracle::monotone(rule));
  const Universe& u = rule.universe();
  EXPECT_DOUBLE_EQ(rule.mass(u.set_of({"B", "D"}), u.all()), 0.4);
  EXPECT_DOUBLE_EQ(rule.mass(u.set_of({"B"}), u.all()), 0.0);
  // Singletons are implied under renormalization.
  EXPECT_DOUBLE_EQ(rule.mass(u.set_of({"B"}), u.set_of({"B"})), 1.0);
}

TEST(Attention, FlagsHandBuiltMonotonicityViolation) {
  const Universe u = abc();
  // mu({a}|{a,b,c}) = 0.5 exceeds mu({a}|{a,b}) = 0.2 and mu({a}|{a,c}) = 0.
  const AttentionRule rule = load_explicit(
      u, EmptySetMode::renormalize,
      {{u.all(), u.set_of({"a"}), 0.5},
       {u.all(), u.all(), 0.5},
       {u.set_of({"a", "b"}), u.set_of({"a"}), 0.2},
       {u.set_of({"a", "b"}), u.set_of({"a", "b"}), 0.8},
       {u.set_of({"a", "c"}), u.set_of({"a", "c"}), 1.0},
       {u.set_of({"b", "c"}), u.set_of({"b", "c"}), 1.0}});
  const ValidationReport r = validate(rule);
  EXPECT_FALSE(r.is_monotone);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(oracle::monotone(rule));
  ASSERT_EQ(r.monotonicity_violations.size(), 2U);
  for (const auto& w : r.monotonicity_violations) {
    EXPECT_EQ(w.subset, u.set_of({"a"}));
    EXPECT_EQ(w.menu, u.all());
  }
  const auto& v = *std::find_if(r.monotonicity_violations.begin(), r.monotonicity_violations.end(),
                                [&](const auto& w) { return w.removed == u.index_of("c"); });
  EXPECT_EQ(v.subset, u.set_of({"a"}));
  EXPECT_EQ(v.menu, u.all());
  EXPECT_EQ(v.removed, u.index_of("c"));
  EXPECT_DOUBLE_EQ(v.mass_in_menu, 0.5);
  EXPECT_DOUBLE_EQ(v.mass_in_reduced, 0.2);
}

TEST(Attention, NonDegeneracyAndCompleteness) {
  const Universe u = abc();
  const AttentionRule rule = load_explicit(u, EmptySetMode::renormalize,
                                           {{u.all(), u.set_of({"a"}), 0.5}});
  const ValidationReport r = validate(rule);
  ASSERT_EQ(r.non_degeneracy_violations.size(), 1U);
  EXPECT_DOUBLE_EQ(r.non_degeneracy_violations[0].mass, 0.5);
  EXPECT_FALSE(r.is_complete);
  EXPECT_EQ(r.missing_menus.size(), 3U);  // the three pairs
  EXPECT_THROW(rule.require(u.set_of({"a", "b"})), IncompletenessError);
}

TEST(Attention, LoadExplicitRejectsMalformedEntries) {
  const Universe u = abc();
  const ItemSet ab = u.set_of({"a", "b"});
  EXPECT_THROW(load_explicit(u, EmptySetMode::renormalize, {{ab, u.all(), 1.0}}), InputError);
  EXPECT_THROW(load_explicit(u, EmptySetMode::renormalize, {{ab, ab, 1.5}}), InputError);
  EXPECT_THROW(load_explicit(u, EmptySetMode::renormalize, {{ab, ab, 0.5}, {ab, ab, 0.5}}),
               InputError);
  EXPECT_THROW(load_explicit(u, EmptySetMode::renormalize, {{ab, ItemSet{}, 1.0}}), InputError);
  EXPECT_THROW(load_explicit(u, EmptySetMode::renormalize, {{ItemSet{}, ItemSet{}, 1.0}}),
               InputError);
  EXPECT_NO_THROW(load_explicit(u, EmptySetMode::no_choice, {{ab, ItemSet{}, 0.1}, {ab, ab, 0.9}}));
}

TEST(Attention, IndependentAttentionProductForm) {
  const Universe u = abc();
  const AttentionRule half = independent_attention(u, 0.5, EmptySetMode::no_choice);
  const ItemSet ab = u.set_of({"a", "b"});
  for (ItemSet t : enumerate_subsets(ab, true)) EXPECT_DOUBLE_EQ(half.mass(t, ab), 0.25);
  EXPECT_TRUE(validate(half).ok());

  const AttentionRule p9 = independent_attention(u, 0.9, EmptySetMode::no_choice);
  EXPECT_NEAR(p9.mass(u.all(), u.all()), 0.729, 1e-15);
  EXPECT_TRUE(oracle::monotone(p9));

  // Renormalized masses divide by 1 - (1-p)^|S|.
  const AttentionRule r = independent_attention(u, 0.5, EmptySetMode::renormalize);
  EXPECT_NEAR(r.mass(u.all(), u.all()), 0.125 / 0.875, 1e-15);
  EXPECT_TRUE(validate(r).ok());

  EXPECT_EQ(independent_attention(u, 1.0, EmptySetMode::renormalize), full_attention(u));
  EXPECT_THROW(independent_attention(u, 0.0, EmptySetMode::renormalize), InputError);
  EXPECT_THROW(independent_attention(u, 1.2, EmptySetMode::renormalize), InputError);
}

TEST(Attention, FullAttentionIsDegenerateOnTheWholeMenu) {
  const Universe u = abc();
  const AttentionRule f = full_attention(u);
  for (ItemSet s : enumerate_subsets(u.all(), false)) {
    EXPECT_DOUBLE_EQ(f.mass(s, s), 1.0);
    EXPECT_EQ(f.require(s).size(), 1U);
  }
  EXPECT_TRUE(validate(f).ok());
}

TEST(Attention, ModeNamesRoundTrip) {
  for (EmptySetMode m : {EmptySetMode::renormalize, EmptySetMode::no_choice}) {
    EXPECT_EQ(parse_empty_set_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_empty_set_mode("drop"), ConfigError);
}

class RandomRuleProperty : public ::testing::TestWithParam<std::tuple<int, RandomRuleShape>> {};

TEST_P(RandomRuleProperty, GeneratedRulesAreCompleteMonotoneAndNonDegenerate) {
  const auto [n, shape] = GetParam();
  std::vector<double> utils;
  for (int i = 0; i < n; ++i) utils.push_back(n - i);
  const Universe u = Universe::numbered(utils);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const AttentionRule rule = random_monotone_rule(u, seed, {10, shape, 16});
    const ValidationReport r = validate(rule);
    ASSERT_TRUE(r.ok()) << "seed " << seed;
    ASSERT_TRUE(oracle::monotone(rule)) << "seed " << seed;
    for (ItemSet s : enumerate_subsets(u.all(), false)) {
      double sum = 0.0;
      for (const auto& [t, p] : rule.require(s)) {
        EXPECT_TRUE(t.is_subset_of(s));
        EXPECT_FALSE(t.empty());
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, RandomRuleProperty,
                         ::testing::Combine(::testing::Values(2, 3, 4, 5),
                                            ::testing::Values(RandomRuleShape::grid,
                                                              RandomRuleShape::size_decreasing)));

TEST(Attention, RandomRuleIsDeterministicPerSeed) {
  const Universe u = abc();
  EXPECT_EQ(random_monotone_rule(u, 42), random_monotone_rule(u, 42));
  bool differs = false;
  for (std::uint64_t s = 1; s < 10 && !differs; ++s) {
    differs = !(random_monotone_rule(u, 0) == random_monotone_rule(u, s));
  }
  EXPECT_TRUE(differs);
}

TEST(Attention, GridRulesUseGridMultiples) {
  const Universe u = abc();
  const AttentionRule rule = random_monotone_rule(u, 9, {4, RandomRuleShape::grid, 16});
  for (const auto& e : rule.entries()) {
    const double scaled = e.probability * 4.0;
    EXPECT_NEAR(scaled, std::round(scaled), 1e-12);
  }
}
