#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ramseq/core.hpp"

namespace ramseq {

/// How the empty consideration set is treated.
enum class EmptySetMode {
  /// Only non-empty consideration sets carry mass; they sum to one per menu.
  renormalize,
  /// The empty set may carry mass; it maps to the no-choice outcome.
  no_choice,
};

const char* to_string(EmptySetMode mode);
/// Throws ConfigError for anything other than "renormalize" / "no-choice".
EmptySetMode parse_empty_set_mode(std::string_view name);

/// One row of an explicitly specified rule: mu(subset | menu) = probability.
struct AttentionEntry {
  ItemSet menu;
  ItemSet subset;
  double probability = 0.0;
};

/// A latent attention rule mu(T|S) over a fixed universe.
///
/// The table may be partial: only the menus that were specified are stored.
/// In renormalize mode a singleton menu {x} that was not specified is implied
/// to attend to {x} with probability one, because that is the only
/// non-degenerate distribution on a singleton.
class AttentionRule {
 public:
  using Distribution = std::map<ItemSet, double>;

  AttentionRule(Universe universe, EmptySetMode mode);

  const Universe& universe() const { return universe_; }
  EmptySetMode mode() const { return mode_; }

  /// Menus explicitly stored, ascending by code.
  std::vector<ItemSet> stored_menus() const;
  /// True when the menu is stored or implied.
  bool defines(ItemSet menu) const;
  /// Stored or implied distribution; nullopt when absent.
  std::optional<Distribution> distribution(ItemSet menu) const;
  /// Like distribution() but throws IncompletenessError when absent.
  Distribution require(ItemSet menu) const;
  /// mu(subset | menu), zero for unlisted subsets. Requires defines(menu).
  double mass(ItemSet subset, ItemSet menu) const;

  /// All explicitly stored rows in (menu, subset) order.
  std::vector<AttentionEntry> entries() const;

  const std::map<ItemSet, Distribution>& table() const { return table_; }

  bool operator==(const AttentionRule&) const = default;

 private:
  friend AttentionRule load_explicit(const Universe&, EmptySetMode,
                                     const std::vector<AttentionEntry>&);

  Universe universe_;
  EmptySetMode mode_;
  std::map<ItemSet, Distribution> table_;
};

struct NonDegeneracyViolation {
  ItemSet menu;
  double mass = 0.0;
};

/// mu(subset|menu) > mu(subset|menu \ {removed}) with `removed` not in subset.
struct MonotonicityViolation {
  ItemSet subset;
  ItemSet menu;
  std::size_t removed = 0;
  double mass_in_menu = 0.0;
  double mass_in_reduced = 0.0;
};

struct ValidationReport {
  std::vector<NonDegeneracyViolation> non_degeneracy_violations;
  std::vector<MonotonicityViolation> monotonicity_violations;
  /// Menus of size >= 2 that the rule leaves undefined.
  std::vector<ItemSet> missing_menus;
  bool is_monotone = true;
  bool is_complete = true;
  /// Number of (T, S, a) triples compared.
  std::size_t comparisons = 0;

  bool ok() const {
    return is_monotone && is_complete && non_degeneracy_violations.empty();
  }
};

/// Checks non-degeneracy on every stored menu, monotonic attention between
/// every pair of defined menus S, S \ {a}, and completeness over all menus of
/// size two or more. Never throws for rule defects.
ValidationReport validate(const AttentionRule& rule);

/// mu(S|S) = 1 for every non-empty S.
AttentionRule full_attention(const Universe& universe);

/// Each item of S is attended independently with probability p.
AttentionRule independent_attention(const Universe& universe, double p, EmptySetMode mode);

/// Rule containing exactly the listed rows; validation is not implied.
/// Throws InputError on duplicates, subset outside menu, empty menu,
/// probability outside [0,1], or an empty subset in renormalize mode.
AttentionRule load_explicit(const Universe& universe, EmptySetMode mode,
                            const std::vector<AttentionEntry>& entries);

/// Shape of randomly generated monotone rules.
enum class RandomRuleShape {
  /// Grid distributions, smallest menus first, capped against sub-menus.
  grid,
  /// mu(T|S) = w(T) / sum of w over non-empty subsets of S, with integer
  /// weights non-increasing in |T|. Monotone and size-decreasing.
  size_decreasing,
};

struct RandomRuleOptions {
  int grid_resolution = 10;
  RandomRuleShape shape = RandomRuleShape::grid;
  /// Whole-rule regeneration attempts before GenerationError.
  int retry_budget = 16;
};

/// Deterministic per seed; the result always validates as monotone and
/// non-degenerate on every menu of the universe (renormalize mode).
///
/// Grid shape: menus are filled in order of increasing size. For each menu a
/// candidate distribution of `grid_resolution` units is drawn (multinomial
/// over non-empty subsets with exponential weights). Any proper subset whose
/// units exceed the smallest mu(T | S \ {a}) is cut down to that cap and the
/// excess is moved onto T = S, which has no cap. Everything is integer
/// arithmetic on the grid, so the monotonicity inequalities hold exactly.
AttentionRule random_monotone_rule(const Universe& universe, std::uint64_t seed,
                                   const RandomRuleOptions& options = {});

}  // namespace ramseq
