#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ramseq/error.hpp"
#include "ramseq/illustration.hpp"
#include "ramseq/ram.hpp"
#include "ramseq/sequential.hpp"

using namespace ramseq;

namespace {

std::vector<std::size_t> idx(const Universe& u, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (const char* l : labels) out.push_back(u.index_of(l));
  return out;
}

}  // namespace

TEST(Sequential, IllustrationLeftFold) {
  const AttentionRule rule = illustration_rule();
  const Universe& u = rule.universe();
  const auto out = sequential_distribution(rule, {idx(u, {"A", "B", "D"})});
  EXPECT_NEAR(out.final.probability(u.index_of("A")), 0.81, 1e-12);
  EXPECT_NEAR(out.final.probability(u.index_of("D")), 0.17, 1e-12);
  EXPECT_NEAR(out.final.probability(u.index_of("B")), 0.02, 1e-12);
  EXPECT_NEAR(out.final.no_choice, 0.0, 1e-12);
  ASSERT_EQ(out.stage_log.size(), 2U);
  EXPECT_EQ(out.stage_log[0].matches.size(), 1U);
  EXPECT_EQ(out.stage_log[1].matches.size(), 2U);
  EXPECT_NEAR(out.stage_log[0].after.probability(u.index_of("A")), 0.9, 1e-12);
}

TEST(Sequential, IllustrationRightAssociative) {
  const AttentionRule rule = illustration_rule();
  const Universe& u = rule.universe();
  const auto out =
      sequential_distribution(rule, {idx(u, {"A", "B", "D"}), Association::right});
  EXPECT_NEAR(out.final.probability(u.index_of("A")), 0.9, 1e-12);
  EXPECT_NEAR(out.final.probability(u.index_of("D")), 0.08, 1e-12);
  EXPECT_NEAR(out.final.probability(u.index_of("B")), 0.02, 1e-12);
}

TEST(Sequential, CompareAndDivergenceOnIllustration) {
  const AttentionRule rule = illustration_rule();
  const Universe& u = rule.universe();
  const TournamentPlan plan{idx(u, {"A", "B", "D"})};
  const auto cmp = compare_architectures(rule, u.all(), plan);
  EXPECT_EQ(cmp.best, u.index_of("A"));
  EXPECT_NEAR(cmp.seq, 0.81, 1e-12);
  EXPECT_NEAR(cmp.sim, 0.6, 1e-12);
  EXPECT_NEAR(cmp.difference, 0.21, 1e-12);
  EXPECT_EQ(cmp.verdict, Verdict::seq_dominant);

  const auto w = divergence_witness(rule, u.all(), plan);
  ASSERT_TRUE(w.has_value());
  // |0.81-0.6| + |0.17-0.4| + |0.02-0| halved
  EXPECT_NEAR(w->total_variation, 0.23, 1e-12);
  EXPECT_EQ(w->item, u.index_of("D"));
  EXPECT_NEAR(w->gap, -0.23, 1e-12);

  EXPECT_THROW(compare_architectures(rule, u.set_of({"A", "B"}), plan), InputError);
}

TEST(Sequential, PlanValidation) {
  const AttentionRule rule = illustration_rule();
  EXPECT_THROW(sequential_distribution(rule, {{0}}), InputError);
  EXPECT_THROW(sequential_distribution(rule, {{0, 0}}), InputError);
  EXPECT_THROW(sequential_distribution(rule, {{0, 5}}), InputError);
  EXPECT_THROW(parse_association("middle"), ConfigError);
  EXPECT_THROW(parse_no_choice_policy("retry"), ConfigError);
  EXPECT_EQ(parse_association("right-associative"), Association::right);
  EXPECT_EQ(parse_no_choice_policy("bye"), NoChoicePolicy::bye);
}

TEST(Sequential, EquivalenceConditionsOnIllustration) {
  const auto eq = check_equivalence_conditions(illustration_rule());
  EXPECT_FALSE(eq.full_attention);
  EXPECT_TRUE(eq.deterministic_max);
  EXPECT_FALSE(eq.equivalence_holds);
  EXPECT_TRUE(eq.counterexample_menu.has_value());
  EXPECT_FALSE(eq.counterexample_order.empty());
}

TEST(Sequential, FullAttentionIsEquivalentToMax) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<double> utils;
    for (int i = 0; i < n; ++i) utils.push_back(n - i + 0.5);
    const auto eq = check_equivalence_conditions(full_attention(Universe::numbered(utils)));
    EXPECT_TRUE(eq.full_attention);
    EXPECT_TRUE(eq.deterministic_max);
    EXPECT_TRUE(eq.equivalence_holds);
  }
}

TEST(Sequential, EquivalenceRefusesLargeUniverses) {
  std::vector<double> utils(8);
  for (int i = 0; i < 8; ++i) utils[i] = i;
  EXPECT_THROW(check_equivalence_conditions(full_attention(Universe::numbered(utils))),
               CapacityError);
}

class SequentialOracle : public ::testing::TestWithParam<std::tuple<int, EmptySetMode>> {};

TEST_P(SequentialOracle, MatchesPathEnumerationForEveryOrderAndPolicy) {
  const auto [n, mode] = GetParam();
  std::vector<double> utils;
  for (int i = 0; i < n; ++i) utils.push_back((i * 5 + 2) % n);
  const Universe u = Universe::numbered(utils);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const AttentionRule rule = mode == EmptySetMode::renormalize
                                   ? random_monotone_rule(u, seed)
                                   : independent_attention(u, 0.3 + 0.08 * seed, mode);
    std::vector<std::size_t> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
      for (bool bye : {false, true}) {
        const NoChoicePolicy policy = bye ? NoChoicePolicy::bye : NoChoicePolicy::abort;
        const auto left = sequential_distribution(rule, {order, Association::left_fold, policy});
        const auto right = sequential_distribution(rule, {order, Association::right, policy});
        const auto ol = oracle::left_fold(rule, order, bye);
        const auto orr = oracle::right_tree(rule, order, 0, bye);
        for (int i = 0; i < n; ++i) {
          ASSERT_NEAR(left.final.probability(i), oracle::get(ol, i), 1e-12);
          ASSERT_NEAR(right.final.probability(i), oracle::get(orr, i), 1e-12);
        }
        ASSERT_NEAR(left.final.no_choice, oracle::get(ol, oracle::kNone), 1e-12);
        ASSERT_NEAR(right.final.no_choice, oracle::get(orr, oracle::kNone), 1e-12);
        ASSERT_TRUE(left.final.is_valid());
        ASSERT_TRUE(right.final.is_valid());
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, SequentialOracle,
                         ::testing::Combine(::testing::Values(2, 3, 4),
                                            ::testing::Values(EmptySetMode::renormalize,
                                                              EmptySetMode::no_choice)));

TEST(Sequential, ByeLetsTheNextChallengerAdvance) {
  const Universe u{{"a", 3}, {"b", 2}, {"c", 1}};
  // Every binary menu is ignored entirely half of the time.
  const ItemSet ab = u.set_of({"a", "b"});
  const ItemSet ac = u.set_of({"a", "c"});
  const ItemSet bc = u.set_of({"b", "c"});
  std::vector<AttentionEntry> rows;
  for (ItemSet m : {ab, ac, bc}) {
    rows.push_back({m, ItemSet{}, 0.5});
    rows.push_back({m, m, 0.5});
  }
  const AttentionRule rule = load_explicit(u, EmptySetMode::no_choice, rows);
  const std::vector<std::size_t> order{1, 2, 0};  // b, c, a
  const auto abort = sequential_distribution(rule, {order, Association::left_fold, NoChoicePolicy::abort});
  EXPECT_DOUBLE_EQ(abort.final.no_choice, 0.75);
  EXPECT_DOUBLE_EQ(abort.final.probability(0), 0.25);
  const auto bye = sequential_distribution(rule, {order, Association::left_fold, NoChoicePolicy::bye});
  // Stage 1: b 0.5, vacant 0.5. Stage 2: a beats b w.p. 0.5, a walks over vacant.
  EXPECT_DOUBLE_EQ(bye.final.probability(0), 0.75);
  EXPECT_DOUBLE_EQ(bye.final.probability(1), 0.0);
  EXPECT_DOUBLE_EQ(bye.final.no_choice, 0.25);
}

TEST(Sequential, VerdictNames) {
  EXPECT_STREQ(to_string(Verdict::seq_dominant), "SEQ-dominant");
  EXPECT_STREQ(to_string(Verdict::sim_dominant), "SIM-dominant");
  EXPECT_STREQ(to_string(Verdict::tie), "tie");
}
