#include "ramseq/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "ramseq/ram.hpp"
#include "ramseq/random.hpp"
#include "ramseq/result_table.hpp"
#include "ramseq/rule_file.hpp"

namespace ramseq {

namespace {

std::string fmt6(double v) { return ResultTable::format_number(v, 6); }

}  // namespace

ChoiceDistribution monte_carlo_choice(const AttentionRule& rule, ItemSet menu,
                                      std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("monte_carlo_choice needs at least one sample");
  const Universe& u = rule.universe();
  u.check_within(menu);

  std::vector<std::pair<double, std::optional<std::size_t>>> cumulative;
  double running = 0.0;
  for (const auto& [subset, mass] : rule.require(menu)) {
    if (mass <= 0.0) continue;
    running += mass;
    cumulative.emplace_back(running, max_preferred(u, subset));
  }
  if (cumulative.empty()) throw InputError("menu " + u.format(menu) + " carries no attention mass");

  std::vector<std::uint64_t> counts(u.size(), 0);
  std::uint64_t none = 0;
  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double draw = rng.uniform() * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw,
                               [](double v, const auto& c) { return v < c.first; });
    if (it == cumulative.end()) --it;
    if (it->second) {
      ++counts[*it->second];
    } else {
      ++none;
    }
  }

  ChoiceDistribution out(menu, u.size());
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < u.size(); ++i) out.probabilities[i] = counts[i] / n;
  out.no_choice = none / n;
  return out;
}

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::superiority: return "superiority";
    case Hypothesis::amplification: return "amplification";
    case Hypothesis::divergence: return "divergence";
    case Hypothesis::equivalence: return "equivalence";
    case Hypothesis::pairwise_preservation: return "pairwise-preservation";
  }
  return "?";
}

Hypothesis parse_hypothesis(std::string_view name) {
  for (Hypothesis h : {Hypothesis::superiority, Hypothesis::amplification, Hypothesis::divergence,
                       Hypothesis::equivalence, Hypothesis::pairwise_preservation}) {
    if (name == to_string(h)) return h;
  }
  throw ConfigError("unknown hypothesis '" + std::string(name) + "'");
}

const char* to_string(RuleFamily f) {
  switch (f) {
    case RuleFamily::grid: return "grid";
    case RuleFamily::size_decreasing: return "size-decreasing";
    case RuleFamily::full_attention: return "full-attention";
    case RuleFamily::independent: return "independent";
  }
  return "?";
}

RuleFamily parse_rule_family(std::string_view name) {
  for (RuleFamily f : {RuleFamily::grid, RuleFamily::size_decreasing, RuleFamily::full_attention,
                       RuleFamily::independent}) {
    if (name == to_string(f)) return f;
  }
  throw ConfigError("unknown rule family '" + std::string(name) + "'");
}

void SearchConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (universe_size < 2 || universe_size > kMaxSearchUniverse) {
    throw ConfigError("universe size must lie in [2, " + std::to_string(kMaxSearchUniverse) + "]");
  }
  const bool needs_triples = hypothesis == Hypothesis::superiority ||
                             hypothesis == Hypothesis::amplification ||
                             hypothesis == Hypothesis::divergence;
  if (needs_triples && universe_size < 3) {
    throw ConfigError(std::string(to_string(hypothesis)) + " needs a universe of at least 3");
  }
  if (grid_resolution < 2) throw ConfigError("grid resolution must be at least 2");
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

double TrialReport::quantity(std::string_view name) const {
  for (const auto& [k, v] : quantities) {
    if (k == name) return v;
  }
  throw InputError("trial report has no quantity '" + std::string(name) + "'");
}

namespace {

std::vector<ItemSet> triples_of(const Universe& u) {
  std::vector<ItemSet> out;
  for (ItemSet s : enumerate_subsets(u.all(), false)) {
    if (s.size() == 3) out.push_back(s);
  }
  return out;
}

bool associations_disagree(const AttentionRule& rule, const std::vector<std::size_t>& order) {
  const auto left = sequential_distribution(rule, {order, Association::left_fold}).final;
  const auto right = sequential_distribution(rule, {order, Association::right}).final;
  return total_variation(left, right) > kTolerance;
}

void evaluate_superiority(const AttentionRule& rule, TrialReport& r) {
  const Universe& u = rule.universe();
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto cmp = compare_architectures(rule, u.all(), {order, Association::left_fold});
  const auto right = sequential_distribution(rule, {order, Association::right}).final;
  r.quantities = {{"pr_seq", cmp.seq},
                  {"pr_sim", cmp.sim},
                  {"difference", cmp.difference},
                  {"pr_seq_right", right.probability(cmp.best)},
                  {"associations_disagree", associations_disagree(rule, order) ? 1.0 : 0.0}};
  r.verdict = to_string(cmp.verdict);
  r.violation = cmp.verdict != Verdict::seq_dominant;
  r.tie = cmp.verdict == Verdict::tie;
  r.detail = "best " + u.label(cmp.best) + ", order " + u.format(u.all()) + " left-fold";
}

void evaluate_amplification(const AttentionRule& rule, TrialReport& r) {
  const Universe& u = rule.universe();
  double worst = 1.0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool disagree = false;
  bool any_tie = false;
  for (ItemSet triple : triples_of(u)) {
    std::vector<std::size_t> order = triple.members();
    do {
      const auto cmp = compare_architectures(rule, triple, {order, Association::left_fold});
      ++checked;
      if (cmp.verdict != Verdict::seq_dominant) {
        if (failures == 0) {
          r.detail = "order (" + u.label(order[0]) + "," + u.label(order[1]) + "," +
                     u.label(order[2]) + "): seq " + fmt6(cmp.seq) + " vs sim " +
                     fmt6(cmp.sim);
        }
        ++failures;
        any_tie = any_tie || cmp.verdict == Verdict::tie;
      }
      worst = std::min(worst, cmp.difference);
      disagree = disagree || associations_disagree(rule, order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  r.quantities = {{"worst_difference", worst},
                  {"orders_checked", double(checked)},
                  {"orders_failing", double(failures)},
                  {"associations_disagree", disagree ? 1.0 : 0.0}};
  r.violation = failures > 0;
  r.tie = r.violation && any_tie;
  r.verdict = r.violation ? "fails" : "holds";
}

void evaluate_divergence(const AttentionRule& rule, TrialReport& r) {
  const Universe& u = rule.universe();
  double widest = 0.0;
  std::size_t diverging = 0;
  std::size_t checked = 0;
  for (ItemSet triple : triples_of(u)) {
    std::vector<std::size_t> order = triple.members();
    do {
      ++checked;
      if (auto w = divergence_witness(rule, triple, {order, Association::left_fold})) {
        if (diverging == 0) {
          r.detail = "order (" + u.label(order[0]) + "," + u.label(order[1]) + "," +
                     u.label(order[2]) + ") diverges on " + u.label(w->item);
        }
        ++diverging;
        widest = std::max(widest, w->total_variation);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  r.quantities = {{"max_total_variation", widest},
                  {"orders_checked", double(checked)},
                  {"orders_diverging", double(diverging)}};
  r.violation = diverging == 0;
  r.verdict = r.violation ? "no divergence" : "diverges";
}

void evaluate_equivalence(const AttentionRule& rule, TrialReport& r) {
  const auto eq = check_equivalence_conditions(rule);
  r.quantities = {{"full_attention", eq.full_attention ? 1.0 : 0.0},
                  {"deterministic_max", eq.deterministic_max ? 1.0 : 0.0},
                  {"equivalence_holds", eq.equivalence_holds ? 1.0 : 0.0}};
  const bool conditions = eq.full_attention && eq.deterministic_max;
  r.violation = conditions != eq.equivalence_holds;
  r.verdict = r.violation ? "iff fails" : "iff holds";
  if (eq.counterexample_menu) {
    r.detail = "architectures differ on " + rule.universe().format(*eq.counterexample_menu);
  }
}

void evaluate_pairwise(const AttentionRule& rule, TrialReport& r) {
  const Universe& u = rule.universe();
  const std::vector<ItemSet> menus = defined_menus(rule);
  double worst_gap = -1.0;
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (std::size_t y = 0; y < u.size(); ++y) {
      if (x == y || !u.strictly_prefers(x, y)) continue;
      const ItemSet pair = ItemSet::singleton(x).with(y);
      const double binary = choice_probability(rule, pair).probability(x);
      for (ItemSet s : menus) {
        if (!pair.is_proper_subset_of(s)) continue;
        ++checked;
        const double in_menu = choice_probability(rule, s).probability(x);
        worst_gap = std::max(worst_gap, in_menu - binary);
        if (binary < in_menu - kTolerance) {
          if (failures == 0) {
            r.detail = "pi(" + u.label(x) + "|" + u.format(pair) + ") = " + fmt6(binary) +
                       " < pi(" + u.label(x) + "|" + u.format(s) + ") = " + fmt6(in_menu);
          }
          ++failures;
        }
      }
    }
  }
  r.quantities = {{"worst_gap", worst_gap},
                  {"comparisons", double(checked)},
                  {"failures", double(failures)}};
  r.violation = failures > 0;
  r.verdict = r.violation ? "fails" : "holds";
}

Universe random_universe(std::size_t n, Rng& rng) {
  std::vector<double> utilities(n);
  std::iota(utilities.begin(), utilities.end(), 1.0);
  for (std::size_t i = n; i > 1; --i) std::swap(utilities[i - 1], utilities[rng.below(i)]);
  return Universe::numbered(utilities);
}

AttentionRule generate(const SearchConfig& config, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  Universe universe = random_universe(config.universe_size, rng);
  const std::uint64_t rule_seed = rng.next();
  switch (config.family) {
    case RuleFamily::grid:
      return random_monotone_rule(universe, rule_seed, {config.grid_resolution, RandomRuleShape::grid});
    case RuleFamily::size_decreasing:
      return random_monotone_rule(universe, rule_seed,
                                  {config.grid_resolution, RandomRuleShape::size_decreasing});
    case RuleFamily::full_attention:
      return full_attention(universe);
    case RuleFamily::independent: {
      const auto g = static_cast<std::uint64_t>(config.grid_resolution);
      const double p = static_cast<double>(1 + rng.below(g)) / static_cast<double>(g);
      return independent_attention(universe, p, EmptySetMode::renormalize);
    }
  }
  throw ConfigError("unknown rule family");
}

}  // namespace

TrialReport evaluate_hypothesis(Hypothesis h, const AttentionRule& rule) {
  TrialReport r;
  switch (h) {
    case Hypothesis::superiority: evaluate_superiority(rule, r); break;
    case Hypothesis::amplification: evaluate_amplification(rule, r); break;
    case Hypothesis::divergence: evaluate_divergence(rule, r); break;
    case Hypothesis::equivalence: evaluate_equivalence(rule, r); break;
    case Hypothesis::pairwise_preservation: evaluate_pairwise(rule, r); break;
  }
  r.rule = rule;
  return r;
}

SearchSummary hypothesis_search(const SearchConfig& config,
                                const std::optional<AttentionRule>& injected) {
  config.validate();

  struct Slot {
    std::optional<TrialReport> report;
    bool generation_failed = false;
  };
  std::vector<Slot> slots(config.trials);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto run = [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(config.seed, i);
    const auto start = std::chrono::steady_clock::now();
    std::optional<AttentionRule> rule;
    if (i == 0 && injected) {
      rule = *injected;
    } else {
      try {
        rule = generate(config, trial_seed);
      } catch (const GenerationError&) {
        slots[i].generation_failed = true;
        return;
      }
    }
    TrialReport r = evaluate_hypothesis(config.hypothesis, *rule);
    r.trial = i;
    r.seed = trial_seed;
    r.elapsed = std::chrono::steady_clock::now() - start;
    slots[i].report = std::move(r);
  };

  auto worker = [&](unsigned offset) {
    try {
      for (std::size_t i = offset; i < config.trials; i += config.threads) run(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (config.threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < config.threads; ++t) pool.emplace_back(worker, t);
  }
  if (first_error) std::rethrow_exception(first_error);

  SearchSummary summary;
  summary.config = config;
  summary.trials = config.trials;
  for (auto& slot : slots) {
    if (slot.generation_failed) {
      ++summary.generation_failures;
      continue;
    }
    TrialReport& r = *slot.report;
    ++summary.evaluated;
    if (r.violation) ++summary.violations;
    if (r.tie) ++summary.ties;
    for (const auto& [k, v] : r.quantities) {
      if (k == "associations_disagree" && v > 0.0) ++summary.association_disagreements;
    }
    if (r.trial == 0 && injected) summary.injected = r;
    if (r.violation && summary.first_witnesses.size() < kMaxWitnesses) {
      summary.first_witnesses.push_back(r);
    }
  }
  if (summary.generation_failures * 2 > summary.trials) {
    throw GenerationError(std::to_string(summary.generation_failures) + " of " +
                          std::to_string(summary.trials) + " rule generations failed");
  }
  return summary;
}

namespace {

nlohmann::ordered_json report_json(const TrialReport& r) {
  nlohmann::ordered_json j;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["violation"] = r.violation;
  j["verdict"] = r.verdict;
  if (!r.detail.empty()) j["detail"] = r.detail;
  nlohmann::ordered_json q = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = std::move(q);
  if (r.rule) j["rule"] = nlohmann::ordered_json::parse(write_rule(*r.rule));
  return j;
}

}  // namespace

std::string to_json(const TrialReport& report) { return report_json(report).dump(2); }

std::string to_json(const SearchSummary& s) {
  nlohmann::ordered_json j;
  j["hypothesis"] = to_string(s.config.hypothesis);
  j["family"] = to_string(s.config.family);
  j["seed"] = s.config.seed;
  j["universe_size"] = s.config.universe_size;
  j["grid_resolution"] = s.config.grid_resolution;
  j["trials"] = s.trials;
  j["evaluated"] = s.evaluated;
  j["violations"] = s.violations;
  j["ties"] = s.ties;
  j["generation_failures"] = s.generation_failures;
  j["association_disagreements"] = s.association_disagreements;
  if (s.injected) j["injected"] = report_json(*s.injected);
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& r : s.first_witnesses) w.push_back(report_json(r));
  j["witnesses"] = std::move(w);
  return j.dump(2);
}

UpliftModel UpliftModel::parse(std::string_view text) {
  auto number_after = [&](std::size_t prefix) {
    double v = 0.0;
    const char* first = text.data() + prefix;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ConfigError("bad uplift '" + std::string(text) + "'");
    return v;
  };
  if (text == "homogeneous") return {Kind::homogeneous, 0.0};
  if (text == "threshold") return {Kind::threshold, 0.0};
  if (text.starts_with("add:")) return {Kind::additive, number_after(4)};
  if (text.starts_with("scale:")) {
    const double f = number_after(6);
    if (!(f > 0.0)) throw ConfigError("scale uplift must be positive");
    return {Kind::multiplicative, f};
  }
  throw ConfigError("unknown uplift '" + std::string(text) +
                    "' (homogeneous, threshold, add:<d>, scale:<f>)");
}

std::string UpliftModel::label() const {
  switch (kind) {
    case Kind::homogeneous: return "homogeneous";
    case Kind::threshold: return "threshold";
    case Kind::additive: return "add:" + fmt6(value);
    case Kind::multiplicative: return "scale:" + fmt6(value);
  }
  return "?";
}

double UpliftModel::binary_parameter(double p_n, int n) const {
  double p2 = p_n;
  switch (kind) {
    case Kind::homogeneous: break;
    case Kind::threshold: p2 = binary_advantage_threshold(p_n, n); break;
    case Kind::additive: p2 = p_n + value; break;
    case Kind::multiplicative: p2 = p_n * value; break;
  }
  if (!(p2 > 0.0)) throw ConfigError("uplift " + label() + " drives p2 to zero or below");
  return std::min(p2, 1.0);
}

std::vector<SweepRow> arity_sweep(const std::vector<double>& p_grid, const std::vector<int>& n_list,
                                  const std::vector<UpliftModel>& uplifts) {
  if (p_grid.empty() || n_list.empty()) throw InputError("sweep grids must be non-empty");
  std::vector<UpliftModel> models{UpliftModel{}};
  for (const auto& m : uplifts) {
    if (m.kind != UpliftModel::Kind::homogeneous) models.push_back(m);
  }

  std::vector<SweepRow> rows;
  for (int n : n_list) {
    if (n < 3) throw InputError("sweep arities must be at least 3");
    for (double p : p_grid) {
      if (!(p > 0.0 && p <= 1.0)) throw InputError("sweep probabilities must lie in (0, 1]");
      for (const auto& m : models) {
        SweepRow row;
        row.n = n;
        row.p_n = p;
        row.uplift = m.label();
        row.p2 = m.binary_parameter(p, n);
        row.threshold = binary_advantage_threshold(p, n);
        ArityParams params;
        params.set(n, p).set(2, row.p2);
        const DominanceResult d = general_n_dominance(params, n);
        row.sim = d.sim;
        row.seq = d.seq;
        row.verdict = d.verdict;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace ramseq
