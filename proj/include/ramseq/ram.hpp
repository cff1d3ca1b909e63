#pragma once

#include <vector>

#include "ramseq/attention.hpp"
#include "ramseq/core.hpp"

namespace ramseq {

/// pi(x|S) = sum of mu(T|S) over T whose maximal element is x.
///
/// Empty-set mass (no-choice mode only) becomes the distribution's no_choice.
/// Throws IncompletenessError when the rule does not define `menu`.
ChoiceDistribution choice_probability(const AttentionRule& rule, ItemSet menu);

/// pi(item | smaller) < pi(item | larger) with smaller a proper subset of larger.
struct RegularityViolation {
  std::size_t item = 0;
  ItemSet smaller;
  ItemSet larger;
  double in_smaller = 0.0;
  double in_larger = 0.0;
};

/// Every regularity violation between nested menus the rule defines.
std::vector<RegularityViolation> regularity_check(const AttentionRule& rule);

/// Menus the rule defines (stored or implied), ascending by code.
std::vector<ItemSet> defined_menus(const AttentionRule& rule);

}  // namespace ramseq
