#include "ramseq/commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "ramseq/arity.hpp"
#include "ramseq/harness.hpp"
#include "ramseq/illustration.hpp"
#include "ramseq/laws.hpp"
#include "ramseq/ram.hpp"
#include "ramseq/result_table.hpp"
#include "ramseq/rule_file.hpp"
#include "ramseq/sequential.hpp"

namespace ramseq::cli {

namespace {

struct Output {
  bool csv = false;
  bool exact = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_flag("--csv", csv, "Comma-separated output");
    cmd->add_flag("--exact", exact, "Print 12 significant digits instead of 6");
  }
  void print(std::ostream& out, const ResultTable& table) const {
    table.render(out, csv ? ResultTable::Format::csv : ResultTable::Format::text, exact);
  }
};

std::vector<std::size_t> indices_of(const Universe& u, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(u.index_of(l));
  return out;
}

ResultTable distribution_table(const Universe& u, const ChoiceDistribution& d, std::string title) {
  ResultTable t({"alternative", "probability"}, std::move(title));
  // Highest utility first.
  std::vector<std::size_t> members = d.menu.members();
  std::sort(members.begin(), members.end(),
            [&](std::size_t a, std::size_t b) { return u.utility(a) > u.utility(b); });
  for (std::size_t i : members) t.add_row({u.label(i), d.probability(i)});
  t.add_row({std::string("(no choice)"), d.no_choice});
  return t;
}

int cmd_validate(const std::string& path, const Output& o, std::ostream& out) {
  const AttentionRule rule = read_rule_file(path);
  const Universe& u = rule.universe();
  const ValidationReport report = validate(rule);

  ResultTable summary({"check", "status", "count"}, "validation of " + path);
  summary.add_row({std::string("non-degeneracy"),
                   std::string(report.non_degeneracy_violations.empty() ? "ok" : "FAIL"),
                   double(report.non_degeneracy_violations.size())});
  summary.add_row({std::string("monotonicity"), std::string(report.is_monotone ? "ok" : "FAIL"),
                   double(report.monotonicity_violations.size())});
  summary.add_row({std::string("completeness"), std::string(report.is_complete ? "ok" : "FAIL"),
                   double(report.missing_menus.size())});
  o.print(out, summary);

  if (!report.non_degeneracy_violations.empty()) {
    ResultTable t({"menu", "mass"}, "\nnon-degeneracy violations");
    for (const auto& v : report.non_degeneracy_violations) t.add_row({u.format(v.menu), v.mass});
    o.print(out, t);
  }
  if (!report.monotonicity_violations.empty()) {
    ResultTable t({"T", "S", "removed", "mu(T|S)", "mu(T|S-a)"}, "\nmonotonicity violations");
    for (const auto& v : report.monotonicity_violations) {
      t.add_row({u.format(v.subset), u.format(v.menu), u.label(v.removed), v.mass_in_menu,
                 v.mass_in_reduced});
    }
    o.print(out, t);
  }
  if (!report.missing_menus.empty()) {
    ResultTable t({"menu"}, "\nundefined menus");
    for (ItemSet m : report.missing_menus) t.add_row({u.format(m)});
    o.print(out, t);
  }
  return report.ok() ? kSuccess : kDomainFailure;
}

int cmd_ram(const std::string& path, const std::vector<std::string>& menu, const Output& o,
            std::ostream& out) {
  const AttentionRule rule = read_rule_file(path);
  const Universe& u = rule.universe();
  const ItemSet s = u.set_of(menu);
  o.print(out, distribution_table(u, choice_probability(rule, s), "pi(x|" + u.format(s) + ")"));
  return kSuccess;
}

int cmd_seq(const std::string& path, const std::vector<std::string>& order, const std::string& assoc,
            const std::string& no_choice, const Output& o, std::ostream& out) {
  const AttentionRule rule = read_rule_file(path);
  const Universe& u = rule.universe();
  const TournamentPlan plan{indices_of(u, order), parse_association(assoc),
                            parse_no_choice_policy(no_choice)};
  const SequentialOutcome result = sequential_distribution(rule, plan);

  o.print(out, distribution_table(u, result.final,
                                  std::string("sequential outcome (") + to_string(plan.association) +
                                      ", no-choice " + to_string(plan.no_choice) + ")"));
  ResultTable log({"stage", "incumbent", "challenger", "reach", "p(incumbent)", "p(challenger)",
                   "p(none)"},
                  "\nstage log");
  for (const auto& stage : result.stage_log) {
    for (const auto& m : stage.matches) {
      log.add_row({double(stage.stage), m.incumbent ? u.label(*m.incumbent) : std::string("-"),
                   u.label(m.challenger), m.reach,
                   m.incumbent ? m.binary.probability(*m.incumbent) : 0.0,
                   m.binary.probability(m.challenger), m.binary.no_choice});
    }
  }
  o.print(out, log);
  return kSuccess;
}

int cmd_compare(const std::string& path, std::vector<std::string> menu, std::vector<std::string> order,
                const std::string& assoc, const Output& o, std::ostream& out) {
  const AttentionRule rule = read_rule_file(path);
  const Universe& u = rule.universe();
  if (order.empty()) order = menu.empty() ? u.labels() : menu;
  const TournamentPlan plan{indices_of(u, order), parse_association(assoc)};
  const ItemSet s = menu.empty() ? plan.members() : u.set_of(menu);

  const ArchitectureComparison cmp = compare_architectures(rule, s, plan);
  const auto divergence = divergence_witness(rule, s, plan);
  ResultTable t({"quantity", "value"}, "architecture comparison on " + u.format(s));
  t.add_row({std::string("best"), u.label(cmp.best)});
  t.add_row({std::string("Pr(SEQ = best)"), cmp.seq});
  t.add_row({std::string("Pr(SIM = best)"), cmp.sim});
  t.add_row({std::string("SEQ - SIM"), cmp.difference});
  t.add_row({std::string("verdict"), std::string(to_string(cmp.verdict))});
  t.add_row({std::string("total variation"), divergence ? divergence->total_variation : 0.0});
  if (divergence) t.add_row({std::string("widest gap at"), u.label(divergence->item)});
  o.print(out, t);
  return kSuccess;
}

int cmd_sweep(const std::vector<double>& p_grid, const std::vector<int>& n_list,
              const std::vector<std::string>& uplift_names, const Output& o, std::ostream& out) {
  std::vector<UpliftModel> uplifts;
  for (const auto& name : uplift_names) uplifts.push_back(UpliftModel::parse(name));
  ResultTable t({"n", "p_n", "uplift", "p2", "threshold", "sim", "seq", "verdict"},
                "arity sweep (beta = 1)");
  for (const auto& r : arity_sweep(p_grid, n_list, uplifts)) {
    t.add_row({double(r.n), r.p_n, r.uplift, r.p2, r.threshold, r.sim, r.seq,
               std::string(to_string(r.verdict))});
  }
  o.print(out, t);
  return kSuccess;
}

int cmd_search(SearchConfig config, const std::string& hypothesis, const std::string& family,
               const std::string& inject, bool json, const Output& o, std::ostream& out) {
  config.hypothesis = parse_hypothesis(hypothesis);
  config.family = parse_rule_family(family);
  std::optional<AttentionRule> injected;
  if (!inject.empty()) injected = read_rule_file(inject);
  const SearchSummary s = hypothesis_search(config, injected);
  if (json) {
    out << to_json(s) << '\n';
    return kSuccess;
  }
  ResultTable t({"quantity", "value"}, std::string("hypothesis search: ") + to_string(config.hypothesis));
  t.add_row({std::string("family"), std::string(to_string(config.family))});
  t.add_row({std::string("seed"), std::to_string(config.seed)});
  t.add_row({std::string("universe size"), double(config.universe_size)});
  t.add_row({std::string("trials"), double(s.trials)});
  t.add_row({std::string("evaluated"), double(s.evaluated)});
  t.add_row({std::string("violations"), double(s.violations)});
  t.add_row({std::string("ties"), double(s.ties)});
  t.add_row({std::string("generation failures"), double(s.generation_failures)});
  t.add_row({std::string("left/right disagreements"), double(s.association_disagreements)});
  o.print(out, t);
  if (s.injected) {
    out << "\ninjected rule (trial 0): " << s.injected->verdict
        << (s.injected->violation ? " [violation]" : "") << '\n';
  }
  if (!s.first_witnesses.empty()) {
    ResultTable w({"trial", "seed", "verdict", "detail"}, "\nfirst witnesses (use --json for rules)");
    for (const auto& r : s.first_witnesses) {
      w.add_row({double(r.trial), std::to_string(r.seed), r.verdict, r.detail});
    }
    o.print(out, w);
  }
  return kSuccess;
}

int cmd_axioms(const std::string& path, double p_floor, const Output& o, std::ostream& out) {
  const AttentionRule rule = read_rule_file(path);
  const std::vector<AxiomReport> reports{check_a1(rule, p_floor), check_a2(rule), check_a3(rule),
                                         check_a4(rule)};
  ResultTable t({"axiom", "holds", "coverage", "witnesses"}, "axiom checks");
  for (const auto& r : reports) {
    t.add_row({r.axiom, std::string(r.holds ? "yes" : "no"), double(r.coverage),
               double(r.witnesses.size())});
  }
  o.print(out, t);
  for (const auto& r : reports) {
    if (r.witnesses.empty()) continue;
    ResultTable w({"detail", "observed", "bound"}, "\n" + r.axiom + " witnesses");
    for (const auto& x : r.witnesses) w.add_row({x.detail, x.observed, x.bound});
    o.print(out, w);
  }
  return kSuccess;
}

int cmd_format(const std::string& path, std::ostream& out) {
  out << write_rule(read_rule_file(path));
  return kSuccess;
}

}  // namespace

int reproduce(const AttentionRule& fixture, std::ostream& out, bool exact, bool csv) {
  constexpr double kTol = 1e-12;
  const Universe& u = fixture.universe();
  const std::size_t a = u.index_of("A");
  const std::size_t b = u.index_of("B");
  const std::size_t d = u.index_of("D");
  const ItemSet abd = u.set_of({"A", "B", "D"});
  const ItemSet ab = u.set_of({"A", "B"});
  const ItemSet ad = u.set_of({"A", "D"});

  const ChoiceDistribution sim = choice_probability(fixture, abd);
  const ChoiceDistribution pair_ab = choice_probability(fixture, ab);
  const ChoiceDistribution pair_ad = choice_probability(fixture, ad);
  const ArchitectureComparison cmp =
      compare_architectures(fixture, abd, {{a, b, d}, Association::left_fold});

  struct Row {
    std::string name;
    double expected;
    double computed;
  };
  const std::vector<Row> rows{
      {"pi(A|{A,B,D})", 0.6, sim.probability(a)},
      {"pi(D|{A,B,D})", 0.4, sim.probability(d)},
      {"pi(B|{A,B,D})", 0.0, sim.probability(b)},
      {"pi(A|{A,B})", 0.9, pair_ab.probability(a)},
      {"pi(A|{A,D})", 0.9, pair_ad.probability(a)},
      {"pi(D|{A,D})", 0.1, pair_ad.probability(d)},
      {"Pr(SEQ(A,B,D) = A)", 0.81, cmp.seq},
      {"Pr(SEQ) - Pr(SIM)", 0.21, cmp.difference},
  };

  bool all_ok = true;
  ResultTable t({"quantity", "expected", "computed", "abs error", "status"},
                "beverage illustration (A > D > B)");
  for (const auto& r : rows) {
    const double err = std::abs(r.computed - r.expected);
    const bool ok = err <= kTol;
    all_ok = all_ok && ok;
    t.add_row({r.name, r.expected, r.computed, err, std::string(ok ? "match" : "MISMATCH")});
  }
  const bool verdict_ok = cmp.verdict == Verdict::seq_dominant;
  all_ok = all_ok && verdict_ok;
  t.add_row({std::string("verdict"), std::string("SEQ-dominant"), std::string(to_string(cmp.verdict)),
             std::string("-"), std::string(verdict_ok ? "match" : "MISMATCH")});
  t.render(out, csv ? ResultTable::Format::csv : ResultTable::Format::text, exact);
  out << (all_ok ? "all quantities match" : "reproduction FAILED") << '\n';
  return all_ok ? kSuccess : kDomainFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random attention and sequential choice engine", "ramseq"};
  app.require_subcommand(1);

  Output o;
  std::string path;
  std::vector<std::string> menu, order;
  std::string assoc = "left", no_choice = "abort";

  auto* validate_cmd = app.add_subcommand("validate", "Check monotonicity, non-degeneracy, completeness");
  validate_cmd->add_option("file", path, "Rule file")->required();
  o.add_flags(validate_cmd);

  auto* ram_cmd = app.add_subcommand("ram", "Simultaneous choice probabilities pi(x|S)");
  ram_cmd->add_option("file", path, "Rule file")->required();
  ram_cmd->add_option("--menu", menu, "Menu, comma separated")->delimiter(',')->required();
  o.add_flags(ram_cmd);

  auto* seq_cmd = app.add_subcommand("seq", "Pairwise tournament outcome distribution");
  seq_cmd->add_option("file", path, "Rule file")->required();
  seq_cmd->add_option("--order", order, "Presentation order, comma separated")->delimiter(',')->required();
  seq_cmd->add_option("--assoc", assoc, "left or right")->check(CLI::IsMember({"left", "right"}));
  seq_cmd->add_option("--no-choice", no_choice, "abort or bye")->check(CLI::IsMember({"abort", "bye"}));
  o.add_flags(seq_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Sequential versus simultaneous on one menu");
  compare_cmd->add_option("file", path, "Rule file")->required();
  compare_cmd->add_option("--menu", menu, "Menu (defaults to the order's members)")->delimiter(',');
  compare_cmd->add_option("--order", order, "Presentation order (defaults to the menu)")->delimiter(',');
  compare_cmd->add_option("--assoc", assoc, "left or right")->check(CLI::IsMember({"left", "right"}));
  o.add_flags(compare_cmd);

  std::vector<double> p_grid{0.5, 0.7, 0.9};
  std::vector<int> n_list{3};
  std::vector<std::string> uplifts{"threshold"};
  auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form success probabilities by arity");
  sweep_cmd->add_option("--p-grid", p_grid, "p_n values, comma separated")->delimiter(',');
  sweep_cmd->add_option("--n", n_list, "Menu sizes, comma separated")->delimiter(',');
  sweep_cmd->add_option("--uplift", uplifts, "homogeneous, threshold, add:<d>, scale:<f>")->delimiter(',');
  o.add_flags(sweep_cmd);

  SearchConfig config;
  std::string hypothesis = "superiority", family = "grid", inject;
  bool json = false;
  auto* search_cmd = app.add_subcommand("search", "Randomized hypothesis search over monotone rules");
  search_cmd->add_option("--hypothesis", hypothesis,
                         "superiority, amplification, divergence, equivalence, pairwise-preservation");
  search_cmd->add_option("--trials", config.trials, "Number of trials");
  search_cmd->add_option("--seed", config.seed, "64-bit seed");
  search_cmd->add_option("--universe", config.universe_size, "Universe size");
  search_cmd->add_option("--grid", config.grid_resolution, "Probability grid resolution");
  search_cmd->add_option("--family", family, "grid, size-decreasing, full-attention, independent");
  search_cmd->add_option("--threads", config.threads, "Worker threads");
  search_cmd->add_option("--inject", inject, "Rule file evaluated as trial 0");
  search_cmd->add_flag("--json", json, "Print the summary as JSON including witness rules");
  o.add_flags(search_cmd);

  double p_floor = 0.8;
  auto* axioms_cmd = app.add_subcommand("axioms", "Check axioms A1-A4");
  axioms_cmd->add_option("file", path, "Rule file")->required();
  axioms_cmd->add_option("--p-floor", p_floor, "A1 probability floor (> 0.5)");
  o.add_flags(axioms_cmd);

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute the embedded beverage illustration");
  o.add_flags(reproduce_cmd);

  auto* format_cmd = app.add_subcommand("format", "Rewrite a rule file in canonical form");
  format_cmd->add_option("file", path, "Rule file")->required();

  std::vector<const char*> argv{"ramseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(path, o, out);
    if (*ram_cmd) return cmd_ram(path, menu, o, out);
    if (*seq_cmd) return cmd_seq(path, order, assoc, no_choice, o, out);
    if (*compare_cmd) return cmd_compare(path, menu, order, assoc, o, out);
    if (*sweep_cmd) return cmd_sweep(p_grid, n_list, uplifts, o, out);
    if (*search_cmd) return cmd_search(config, hypothesis, family, inject, json, o, out);
    if (*axioms_cmd) return cmd_axioms(path, p_floor, o, out);
    if (*reproduce_cmd) return reproduce(illustration_rule(), out, o.exact, o.csv);
    if (*format_cmd) return cmd_format(path, out);
  } catch (const IncompletenessError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace ramseq::cli
