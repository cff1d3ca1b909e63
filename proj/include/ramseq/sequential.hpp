#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramseq/attention.hpp"
#include "ramseq/core.hpp"

namespace ramseq {

enum class Association {
  /// C(C(C(x1,x2),x3),...): the stage-1 winner meets x3, and so on.
  left_fold,
  /// C(x1, C(x2, C(..., xn))): x1 meets the winner of the rest.
  right,
};

/// What happens when a binary stage attends to nothing.
enum class NoChoicePolicy {
  /// The whole tournament ends in no choice.
  abort,
  /// The stage produces no winner and the next item advances unopposed.
  bye,
};

const char* to_string(Association a);
Association parse_association(std::string_view name);
const char* to_string(NoChoicePolicy p);
NoChoicePolicy parse_no_choice_policy(std::string_view name);

struct TournamentPlan {
  /// Presentation sequence; distinct alternatives, at least two.
  std::vector<std::size_t> order;
  Association association = Association::left_fold;
  NoChoicePolicy no_choice = NoChoicePolicy::abort;

  ItemSet members() const { return ItemSet::of(order); }
};

/// Outcome of one binary comparison reached with positive probability.
struct StageMatch {
  /// Holder of the running winner slot; nullopt when a bye carried nothing in.
  std::optional<std::size_t> incumbent;
  std::size_t challenger = 0;
  /// Probability that this match is played.
  double reach = 0.0;
  /// Binary distribution on {incumbent, challenger} (unconditional on reach).
  ChoiceDistribution binary;
};

struct StageRecord {
  std::size_t stage = 0;  // 1-based
  std::size_t challenger = 0;
  std::vector<StageMatch> matches;
  /// Distribution of the running winner after this stage.
  ChoiceDistribution after;
};

struct SequentialOutcome {
  ChoiceDistribution final;
  std::vector<StageRecord> stage_log;
};

/// Exact outcome distribution of the pairwise tournament. Stages draw
/// attention independently; each stage uses choice_probability on its pair.
/// Throws InputError for a malformed plan and IncompletenessError when a
/// reachable pair is not defined by the rule.
SequentialOutcome sequential_distribution(const AttentionRule& rule, const TournamentPlan& plan);

enum class Verdict { seq_dominant, sim_dominant, tie };
const char* to_string(Verdict v);

struct ArchitectureComparison {
  std::size_t best = 0;  // argmax utility over the menu
  double seq = 0.0;      // Pr(C^SEQ = best)
  double sim = 0.0;      // Pr(C^SIM = best)
  double difference = 0.0;
  Verdict verdict = Verdict::tie;
};

/// `plan` must present exactly the members of `menu`.
ArchitectureComparison compare_architectures(const AttentionRule& rule, ItemSet menu,
                                             const TournamentPlan& plan);

struct DivergenceWitness {
  double total_variation = 0.0;
  std::size_t item = 0;  // largest |seq - sim| gap
  double gap = 0.0;      // seq - sim for that item
  ChoiceDistribution seq;
  ChoiceDistribution sim;
};

/// nullopt when the two architectures agree within kTolerance.
std::optional<DivergenceWitness> divergence_witness(const AttentionRule& rule, ItemSet menu,
                                                    const TournamentPlan& plan);

struct EquivalenceConditions {
  bool full_attention = false;
  bool deterministic_max = false;
  bool equivalence_holds = false;
  /// First menu/order found where the architectures differ.
  std::optional<ItemSet> counterexample_menu;
  std::vector<std::size_t> counterexample_order;
};

/// Largest universe check_equivalence_conditions will enumerate.
inline constexpr std::size_t kMaxEquivalenceUniverse = 7;

/// Checks mu(S|S) = 1 on every menu of size >= 2, that full attention always
/// lands on the maximum, and that C^SEQ equals C^SIM on every menu, every
/// presentation order, and both associations. Needs all menus of size >= 2.
EquivalenceConditions check_equivalence_conditions(const AttentionRule& rule);

}  // namespace ramseq
