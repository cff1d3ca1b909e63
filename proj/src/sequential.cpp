#include "ramseq/sequential.hpp"

#include <algorithm>
#include <cmath>

#include "ramseq/ram.hpp"

namespace ramseq {

const char* to_string(Association a) { return a == Association::left_fold ? "left" : "right"; }

Association parse_association(std::string_view name) {
  if (name == "left" || name == "left-fold") return Association::left_fold;
  if (name == "right" || name == "right-associative") return Association::right;
  throw ConfigError("unknown association '" + std::string(name) + "' (expected left or right)");
}

const char* to_string(NoChoicePolicy p) { return p == NoChoicePolicy::abort ? "abort" : "bye"; }

NoChoicePolicy parse_no_choice_policy(std::string_view name) {
  if (name == "abort") return NoChoicePolicy::abort;
  if (name == "bye") return NoChoicePolicy::bye;
  throw ConfigError("unknown no-choice policy '" + std::string(name) + "' (expected abort or bye)");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::seq_dominant: return "SEQ-dominant";
    case Verdict::sim_dominant: return "SIM-dominant";
    case Verdict::tie: return "tie";
  }
  return "?";
}

namespace {

void check_plan(const Universe& u, const TournamentPlan& plan) {
  if (plan.order.size() < 2) throw InputError("tournament order needs at least two alternatives");
  ItemSet seen;
  for (std::size_t i : plan.order) {
    if (i >= u.size()) throw InputError("tournament order refers to an unknown alternative");
    if (seen.contains(i)) throw InputError("tournament order repeats " + u.label(i));
    seen = seen.with(i);
  }
}

}  // namespace

SequentialOutcome sequential_distribution(const AttentionRule& rule, const TournamentPlan& plan) {
  const Universe& u = rule.universe();
  check_plan(u, plan);

  // The right-associative tree C(x1, C(x2, ...)) is the left fold over the
  // reversed sequence, because a binary stage depends only on the pair.
  std::vector<std::size_t> items = plan.order;
  if (plan.association == Association::right) std::reverse(items.begin(), items.end());

  std::vector<double> winner(u.size(), 0.0);
  winner[items.front()] = 1.0;
  double vacant = 0.0;   // bye: no running winner
  double aborted = 0.0;  // abort: tournament ended in no choice
  ItemSet seen = ItemSet::singleton(items.front());

  SequentialOutcome out;
  for (std::size_t s = 1; s < items.size(); ++s) {
    const std::size_t c = items[s];
    seen = seen.with(c);
    StageRecord record;
    record.stage = s;
    record.challenger = c;

    std::vector<double> next(u.size(), 0.0);
    double next_vacant = 0.0;
    for (std::size_t w = 0; w < u.size(); ++w) {
      const double m = winner[w];
      if (m <= 0.0) continue;
      ChoiceDistribution binary = choice_probability(rule, ItemSet::singleton(w).with(c));
      next[w] += m * binary.probability(w);
      next[c] += m * binary.probability(c);
      if (plan.no_choice == NoChoicePolicy::abort) {
        aborted += m * binary.no_choice;
      } else {
        next_vacant += m * binary.no_choice;
      }
      record.matches.push_back({w, c, m, std::move(binary)});
    }
    if (vacant > 0.0) {
      next[c] += vacant;
      ChoiceDistribution walkover(ItemSet::singleton(c), u.size());
      walkover.probabilities[c] = 1.0;
      record.matches.push_back({std::nullopt, c, vacant, std::move(walkover)});
    }
    winner = std::move(next);
    vacant = next_vacant;

    record.after = ChoiceDistribution(seen, u.size());
    record.after.probabilities = winner;
    record.after.no_choice = aborted + vacant;
    out.stage_log.push_back(std::move(record));
  }

  out.final = out.stage_log.back().after;
  return out;
}

ArchitectureComparison compare_architectures(const AttentionRule& rule, ItemSet menu,
                                             const TournamentPlan& plan) {
  const Universe& u = rule.universe();
  check_plan(u, plan);
  if (plan.members() != menu) {
    throw InputError("tournament order " + u.format(plan.members()) + " does not match menu " +
                     u.format(menu));
  }
  ArchitectureComparison out;
  out.best = *max_preferred(u, menu);
  out.sim = choice_probability(rule, menu).probability(out.best);
  out.seq = sequential_distribution(rule, plan).final.probability(out.best);
  out.difference = out.seq - out.sim;
  if (out.difference > kTolerance) {
    out.verdict = Verdict::seq_dominant;
  } else if (out.difference < -kTolerance) {
    out.verdict = Verdict::sim_dominant;
  } else {
    out.verdict = Verdict::tie;
  }
  return out;
}

std::optional<DivergenceWitness> divergence_witness(const AttentionRule& rule, ItemSet menu,
                                                    const TournamentPlan& plan) {
  const Universe& u = rule.universe();
  check_plan(u, plan);
  if (plan.members() != menu) {
    throw InputError("tournament order does not match menu " + u.format(menu));
  }
  DivergenceWitness w;
  w.sim = choice_probability(rule, menu);
  w.seq = sequential_distribution(rule, plan).final;
  w.total_variation = total_variation(w.seq, w.sim);
  if (w.total_variation <= kTolerance) return std::nullopt;
  double widest = -1.0;
  for (std::size_t i : menu.members()) {
    double gap = w.seq.probability(i) - w.sim.probability(i);
    if (std::abs(gap) > widest) {
      widest = std::abs(gap);
      w.item = i;
      w.gap = gap;
    }
  }
  return w;
}

EquivalenceConditions check_equivalence_conditions(const AttentionRule& rule) {
  const Universe& u = rule.universe();
  if (u.size() > kMaxEquivalenceUniverse) {
    throw CapacityError("equivalence check enumerates every order; universe limit is " +
                        std::to_string(kMaxEquivalenceUniverse));
  }
  std::vector<ItemSet> menus;
  for (ItemSet m : enumerate_subsets(u.all(), false)) {
    if (m.size() < 2) continue;
    if (!rule.defines(m)) {
      throw IncompletenessError("equivalence check needs menu " + u.format(m));
    }
    menus.push_back(m);
  }

  EquivalenceConditions out;
  out.full_attention = true;
  out.deterministic_max = true;
  out.equivalence_holds = true;
  for (ItemSet menu : menus) {
    const double full = rule.mass(menu, menu);
    if (std::abs(full - 1.0) > kTolerance) out.full_attention = false;
    const ChoiceDistribution sim = choice_probability(rule, menu);
    if (sim.probability(*max_preferred(u, menu)) < full - kTolerance) out.deterministic_max = false;

    if (!out.equivalence_holds) continue;
    std::vector<std::size_t> order = menu.members();
    do {
      for (Association assoc : {Association::left_fold, Association::right}) {
        TournamentPlan plan{order, assoc, NoChoicePolicy::abort};
        if (total_variation(sequential_distribution(rule, plan).final, sim) > kTolerance) {
          out.equivalence_holds = false;
          out.counterexample_menu = menu;
          out.counterexample_order = order;
          break;
        }
      }
    } while (out.equivalence_holds && std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

}  // namespace ramseq
