#include "ramseq/ram.hpp"

namespace ramseq {

ChoiceDistribution choice_probability(const AttentionRule& rule, ItemSet menu) {
  const Universe& u = rule.universe();
  u.check_within(menu);
  if (menu.empty()) throw InputError("choice_probability: empty menu");

  ChoiceDistribution out(menu, u.size());
  for (const auto& [subset, mass] : rule.require(menu)) {
    if (auto best = max_preferred(u, subset)) {
      out.probabilities[*best] += mass;
    } else {
      out.no_choice += mass;
    }
  }
  return out;
}

std::vector<ItemSet> defined_menus(const AttentionRule& rule) {
  std::vector<ItemSet> out;
  for (ItemSet menu : enumerate_subsets(rule.universe().all(), false)) {
    if (rule.defines(menu)) out.push_back(menu);
  }
  return out;
}

std::vector<RegularityViolation> regularity_check(const AttentionRule& rule) {
  const std::vector<ItemSet> menus = defined_menus(rule);
  std::vector<ChoiceDistribution> pis;
  pis.reserve(menus.size());
  for (ItemSet m : menus) pis.push_back(choice_probability(rule, m));

  std::vector<RegularityViolation> out;
  for (std::size_t i = 0; i < menus.size(); ++i) {
    for (std::size_t j = 0; j < menus.size(); ++j) {
      if (!menus[i].is_proper_subset_of(menus[j])) continue;
      for (std::size_t x : menus[i].members()) {
        double small = pis[i].probability(x);
        double large = pis[j].probability(x);
        if (small < large - kTolerance) out.push_back({x, menus[i], menus[j], small, large});
      }
    }
  }
  return out;
}

}  // namespace ramseq
