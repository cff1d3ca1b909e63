#include "ramseq/attention.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ramseq/random.hpp"

namespace ramseq {

const char* to_string(EmptySetMode mode) {
  return mode == EmptySetMode::renormalize ? "renormalize" : "no-choice";
}

EmptySetMode parse_empty_set_mode(std::string_view name) {
  if (name == "renormalize") return EmptySetMode::renormalize;
  if (name == "no-choice") return EmptySetMode::no_choice;
  throw ConfigError("unknown empty-set mode '" + std::string(name) +
                    "' (expected renormalize or no-choice)");
}

AttentionRule::AttentionRule(Universe universe, EmptySetMode mode)
    : universe_(std::move(universe)), mode_(mode) {}

std::vector<ItemSet> AttentionRule::stored_menus() const {
  std::vector<ItemSet> out;
  out.reserve(table_.size());
  for (const auto& [menu, _] : table_) out.push_back(menu);
  return out;
}

bool AttentionRule::defines(ItemSet menu) const {
  if (menu.empty() || !menu.is_subset_of(universe_.all())) return false;
  if (table_.contains(menu)) return true;
  return mode_ == EmptySetMode::renormalize && menu.size() == 1;
}

std::optional<AttentionRule::Distribution> AttentionRule::distribution(ItemSet menu) const {
  if (auto it = table_.find(menu); it != table_.end()) return it->second;
  if (defines(menu)) return Distribution{{menu, 1.0}};
  return std::nullopt;
}

AttentionRule::Distribution AttentionRule::require(ItemSet menu) const {
  if (auto d = distribution(menu)) return *std::move(d);
  throw IncompletenessError("attention rule does not define menu " + universe_.format(menu));
}

double AttentionRule::mass(ItemSet subset, ItemSet menu) const {
  if (auto it = table_.find(menu); it != table_.end()) {
    auto jt = it->second.find(subset);
    return jt == it->second.end() ? 0.0 : jt->second;
  }
  if (defines(menu)) return subset == menu ? 1.0 : 0.0;
  throw IncompletenessError("attention rule does not define menu " + universe_.format(menu));
}

std::vector<AttentionEntry> AttentionRule::entries() const {
  std::vector<AttentionEntry> out;
  for (const auto& [menu, dist] : table_) {
    for (const auto& [subset, p] : dist) out.push_back({menu, subset, p});
  }
  return out;
}

AttentionRule load_explicit(const Universe& universe, EmptySetMode mode,
                            const std::vector<AttentionEntry>& entries) {
  AttentionRule rule(universe, mode);
  for (const auto& e : entries) {
    universe.check_within(e.menu);
    if (e.menu.empty()) throw InputError("attention entry with an empty menu");
    if (!e.subset.is_subset_of(e.menu)) {
      throw InputError("consideration set " + universe.format(e.subset) + " is not a subset of " +
                       universe.format(e.menu));
    }
    if (e.subset.empty() && mode == EmptySetMode::renormalize) {
      throw InputError("empty consideration set on menu " + universe.format(e.menu) +
                       " requires no-choice mode");
    }
    if (!(e.probability >= 0.0 && e.probability <= 1.0)) {
      throw InputError("probability outside [0,1] for " + universe.format(e.subset) + " | " +
                       universe.format(e.menu));
    }
    auto& dist = rule.table_[e.menu];
    if (!dist.emplace(e.subset, e.probability).second) {
      throw InputError("duplicate attention entry " + universe.format(e.subset) + " | " +
                       universe.format(e.menu));
    }
  }
  return rule;
}

ValidationReport validate(const AttentionRule& rule) {
  ValidationReport report;
  const Universe& u = rule.universe();

  for (const auto& [menu, dist] : rule.table()) {
    double mass = 0.0;
    for (const auto& [subset, p] : dist) {
      if (!subset.empty() || rule.mode() == EmptySetMode::no_choice) mass += p;
    }
    if (std::abs(mass - 1.0) > kTolerance) report.non_degeneracy_violations.push_back({menu, mass});

    for (const auto& [subset, p] : dist) {
      if (p <= 0.0) continue;  // zero mass cannot exceed anything
      for (std::size_t a : (menu - subset).members()) {
        ItemSet reduced = menu.without(a);
        if (reduced.empty() || !rule.defines(reduced)) continue;
        ++report.comparisons;
        double q = rule.mass(subset, reduced);
        if (p > q + kTolerance) report.monotonicity_violations.push_back({subset, menu, a, p, q});
      }
    }
  }

  for (ItemSet menu : enumerate_subsets(u.all(), false)) {
    if (!rule.defines(menu)) report.missing_menus.push_back(menu);
  }
  report.is_monotone = report.monotonicity_violations.empty();
  report.is_complete = report.missing_menus.empty();
  return report;
}

AttentionRule full_attention(const Universe& universe) {
  std::vector<AttentionEntry> entries;
  for (ItemSet menu : enumerate_subsets(universe.all(), false)) entries.push_back({menu, menu, 1.0});
  return load_explicit(universe, EmptySetMode::renormalize, entries);
}

AttentionRule independent_attention(const Universe& universe, double p, EmptySetMode mode) {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("independent attention needs 0 < p <= 1");
  std::vector<AttentionEntry> entries;
  for (ItemSet menu : enumerate_subsets(universe.all(), false)) {
    const int n = static_cast<int>(menu.size());
    const double empty_mass = std::pow(1.0 - p, n);
    const double scale = mode == EmptySetMode::renormalize ? 1.0 / (1.0 - empty_mass) : 1.0;
    for (ItemSet subset : enumerate_subsets(menu, mode == EmptySetMode::no_choice)) {
      const int k = static_cast<int>(subset.size());
      double mass = std::pow(p, k) * std::pow(1.0 - p, n - k);
      if (!subset.empty()) mass *= scale;
      if (mass > 0.0) entries.push_back({menu, subset, mass});
    }
  }
  return load_explicit(universe, mode, entries);
}

namespace {

std::vector<ItemSet> menus_by_size(const Universe& universe) {
  std::vector<ItemSet> menus = enumerate_subsets(universe.all(), false);
  std::stable_sort(menus.begin(), menus.end(),
                   [](ItemSet a, ItemSet b) { return a.size() < b.size(); });
  return menus;
}

// Grid units per menu, filled smallest-first so every cap is already known.
std::vector<AttentionEntry> grid_rule(const Universe& universe, Rng& rng, int units) {
  std::map<ItemSet, std::map<ItemSet, int>> counts;
  std::vector<AttentionEntry> entries;
  for (ItemSet menu : menus_by_size(universe)) {
    const std::vector<ItemSet> subsets = enumerate_subsets(menu, false);
    std::vector<double> weights(subsets.size());
    for (double& w : weights) w = rng.exponential();
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

    std::map<ItemSet, int>& cell = counts[menu];
    for (int unit = 0; unit < units; ++unit) {
      double r = rng.uniform() * total;
      std::size_t pick = 0;
      while (pick + 1 < subsets.size() && r >= weights[pick]) r -= weights[pick++];
      ++cell[subsets[pick]];
    }

    // Cap proper subsets at min over a of mu(T | S \ {a}); excess goes to S.
    int excess = 0;
    for (auto& [subset, n] : cell) {
      if (subset == menu) continue;
      int cap = units;
      for (std::size_t a : (menu - subset).members()) {
        const auto& reduced = counts.at(menu.without(a));
        auto it = reduced.find(subset);
        cap = std::min(cap, it == reduced.end() ? 0 : it->second);
      }
      if (n > cap) {
        excess += n - cap;
        n = cap;
      }
    }
    cell[menu] += excess;

    for (const auto& [subset, n] : cell) {
      if (n > 0) entries.push_back({menu, subset, static_cast<double>(n) / units});
    }
  }
  return entries;
}

std::vector<AttentionEntry> size_decreasing_rule(const Universe& universe, Rng& rng, int levels) {
  // Weights are drawn for every non-empty subset of X, sorted, and handed out
  // largest-first to the smallest subsets.
  std::vector<ItemSet> subsets = menus_by_size(universe);
  std::vector<std::uint64_t> weights(subsets.size());
  for (auto& w : weights) w = 1 + rng.below(static_cast<std::uint64_t>(levels));
  std::sort(weights.begin(), weights.end(), std::greater<>());
  std::map<ItemSet, std::uint64_t> weight_of;
  for (std::size_t i = 0; i < subsets.size(); ++i) weight_of[subsets[i]] = weights[i];

  std::vector<AttentionEntry> entries;
  for (ItemSet menu : enumerate_subsets(universe.all(), false)) {
    std::uint64_t z = 0;
    for (ItemSet t : enumerate_subsets(menu, false)) z += weight_of[t];
    for (ItemSet t : enumerate_subsets(menu, false)) {
      entries.push_back({menu, t, static_cast<double>(weight_of[t]) / static_cast<double>(z)});
    }
  }
  return entries;
}

}  // namespace

AttentionRule random_monotone_rule(const Universe& universe, std::uint64_t seed,
                                   const RandomRuleOptions& options) {
  if (options.grid_resolution < 2) throw InputError("grid_resolution must be at least 2");
  for (int attempt = 0; attempt < std::max(1, options.retry_budget); ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<AttentionEntry> entries =
        options.shape == RandomRuleShape::grid
            ? grid_rule(universe, rng, options.grid_resolution)
            : size_decreasing_rule(universe, rng, options.grid_resolution);
    AttentionRule rule = load_explicit(universe, EmptySetMode::renormalize, entries);
    if (validate(rule).ok()) return rule;
  }
  throw GenerationError("no feasible monotone rule within " +
                        std::to_string(options.retry_budget) + " attempts");
}

}  // namespace ramseq
