#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramseq/arity.hpp"
#include "ramseq/attention.hpp"
#include "ramseq/sequential.hpp"

namespace ramseq {

/// Empirical choice frequencies from `samples` draws T ~ mu(.|menu).
/// Deterministic given `seed`.
ChoiceDistribution monte_carlo_choice(const AttentionRule& rule, ItemSet menu,
                                      std::uint64_t samples, std::uint64_t seed);

enum class Hypothesis {
  /// Pr(C^SEQ = x*) > Pr(C^SIM = x*) on the whole universe, presented in
  /// universe order, left fold.
  superiority,
  /// The same strict inequality for every triple and every order of it.
  amplification,
  /// Some triple and order where the two architectures' outcome
  /// distributions differ.
  divergence,
  /// C^SEQ == C^SIM on every menu and order exactly when mu(S|S) = 1 always.
  equivalence,
  /// pi(x | {x,y}) >= pi(x | S) for x preferred to y and every S containing both.
  pairwise_preservation,
};

const char* to_string(Hypothesis h);
Hypothesis parse_hypothesis(std::string_view name);

/// Where the rules under test come from.
enum class RuleFamily {
  grid,             // random_monotone_rule, grid shape
  size_decreasing,  // random_monotone_rule, size-decreasing shape
  full_attention,
  independent,      // independent_attention, renormalized, p drawn from the grid
};

const char* to_string(RuleFamily f);
RuleFamily parse_rule_family(std::string_view name);

struct SearchConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t universe_size = 3;
  int grid_resolution = 10;
  Hypothesis hypothesis = Hypothesis::superiority;
  RuleFamily family = RuleFamily::grid;
  unsigned threads = 1;

  /// Throws ConfigError.
  void validate() const;
};

/// Largest universe the search will enumerate per trial.
inline constexpr std::size_t kMaxSearchUniverse = 6;

struct TrialReport {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<AttentionRule> rule;
  std::vector<std::pair<std::string, double>> quantities;
  bool violation = false;
  bool tie = false;
  std::string verdict;
  std::string detail;
  /// Not part of serialized output.
  std::chrono::nanoseconds elapsed{0};

  double quantity(std::string_view name) const;
};

struct SearchSummary {
  SearchConfig config;
  std::size_t trials = 0;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  std::size_t ties = 0;
  std::size_t generation_failures = 0;
  /// Trials where left-fold and right-associative outcomes differ
  /// (superiority and amplification only).
  std::size_t association_disagreements = 0;
  /// Up to kMaxWitnesses violating trials, in trial order.
  std::vector<TrialReport> first_witnesses;
  /// Trial 0 when a rule was injected.
  std::optional<TrialReport> injected;
};

inline constexpr std::size_t kMaxWitnesses = 10;

/// Runs `config.trials` independent trials. Trial i uses the sub-seed
/// derive_seed(config.seed, i) for the universe's utility order and for the
/// rule, so the summary does not depend on evaluation order or thread count.
/// An injected rule replaces the generated one in trial 0. Generation failures
/// are counted; more than half the trials failing is fatal.
SearchSummary hypothesis_search(const SearchConfig& config,
                                const std::optional<AttentionRule>& injected = std::nullopt);

/// Evaluates one hypothesis on one rule.
TrialReport evaluate_hypothesis(Hypothesis h, const AttentionRule& rule);

/// Deterministic JSON (elapsed times omitted).
std::string to_json(const TrialReport& report);
std::string to_json(const SearchSummary& summary);

/// How the binary parameter p2 is derived from p_n in a sweep.
struct UpliftModel {
  enum class Kind { homogeneous, threshold, additive, multiplicative };
  Kind kind = Kind::homogeneous;
  double value = 0.0;

  /// "homogeneous", "threshold", "add:<delta>", "scale:<factor>".
  static UpliftModel parse(std::string_view text);
  std::string label() const;
  /// Clamped to (0, 1].
  double binary_parameter(double p_n, int n) const;
};

struct SweepRow {
  int n = 3;
  double p_n = 0.0;
  std::string uplift;
  double p2 = 0.0;
  double threshold = 0.0;
  double sim = 0.0;
  double seq = 0.0;
  Verdict verdict = Verdict::tie;
};

/// For every p_n in the grid and n in the list, one row per uplift model
/// (beta = 1 throughout). A homogeneous row is always present.
std::vector<SweepRow> arity_sweep(const std::vector<double>& p_grid, const std::vector<int>& n_list,
                                  const std::vector<UpliftModel>& uplifts);

}  // namespace ramseq
