#include "ramseq/laws.hpp"

#include <cmath>

#include "ramseq/ram.hpp"

namespace ramseq {

namespace {

ItemSet pair_of(std::size_t x, std::size_t y) { return ItemSet::singleton(x).with(y); }

void finish(AxiomReport& report) { report.holds = report.witnesses.empty(); }

}  // namespace

AxiomReport check_a1(const AttentionRule& rule, double p_floor) {
  if (!(p_floor > 0.5 && p_floor <= 1.0)) throw InputError("A1 floor must lie in (0.5, 1]");
  const Universe& u = rule.universe();
  AxiomReport report{"A1", true, {}, 0};
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (std::size_t y = 0; y < u.size(); ++y) {
      if (x == y || !u.strictly_prefers(x, y)) continue;
      ++report.coverage;
      const double p = choice_probability(rule, pair_of(x, y)).probability(x);
      if (p < p_floor - kTolerance) {
        report.witnesses.push_back({{x, y}, {pair_of(x, y)}, p, p_floor,
                                    u.label(x) + " over " + u.label(y) + " below floor"});
      }
    }
  }
  finish(report);
  return report;
}

AxiomReport check_a2(const AttentionRule& rule) {
  const Universe& u = rule.universe();
  const std::size_t n = u.size();
  AxiomReport report{"A2", true, {}, 0};

  // modal[x][y]: the strictly more likely member of {x, y}, if any.
  std::vector<std::vector<std::optional<std::size_t>>> modal(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      ++report.coverage;
      const ChoiceDistribution d = choice_probability(rule, pair_of(x, y));
      const double px = d.probability(x);
      const double py = d.probability(y);
      if (std::abs(px - py) <= kTolerance) {
        report.witnesses.push_back({{x, y}, {pair_of(x, y)}, px, py,
                                    "modal choice between " + u.label(x) + " and " + u.label(y) +
                                        " is a tie"});
        continue;
      }
      modal[x][y] = modal[y][x] = px > py ? x : y;
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (modal[x][y] != x || modal[x][z] != x) continue;
        ++report.coverage;
        if (modal[*modal[x][y]][z] != x) {
          report.witnesses.push_back({{x, y, z}, {}, 0.0, 0.0,
                                      "C(C(" + u.label(x) + "," + u.label(y) + ")," + u.label(z) +
                                          ") != " + u.label(x)});
        }
      }
    }
  }
  finish(report);
  return report;
}

AxiomReport check_a3(const AttentionRule& rule) {
  const Universe& u = rule.universe();
  const ValidationReport v = validate(rule);
  AxiomReport report{"A3", true, {}, v.comparisons};
  for (const auto& m : v.monotonicity_violations) {
    report.witnesses.push_back({{m.removed}, {m.subset, m.menu}, m.mass_in_menu, m.mass_in_reduced,
                                "mu(" + u.format(m.subset) + "|" + u.format(m.menu) +
                                    ") exceeds the value after removing " + u.label(m.removed)});
  }
  finish(report);
  return report;
}

AxiomReport check_a4(const AttentionRule& rule) {
  const Universe& u = rule.universe();
  const std::vector<ItemSet> menus = defined_menus(rule);
  std::vector<ChoiceDistribution> pis;
  pis.reserve(menus.size());
  for (ItemSet m : menus) pis.push_back(choice_probability(rule, m));

  AxiomReport report{"A4", true, {}, 0};
  for (std::size_t i = 0; i < menus.size(); ++i) {
    for (std::size_t j = 0; j < menus.size(); ++j) {
      if (!menus[i].is_proper_subset_of(menus[j])) continue;
      for (std::size_t x : menus[i].members()) {
        ++report.coverage;
        const double small = pis[i].probability(x);
        const double large = pis[j].probability(x);
        if (small < large - kTolerance) {
          report.witnesses.push_back({{x}, {menus[i], menus[j]}, small, large,
                                      "pi(" + u.label(x) + "|" + u.format(menus[i]) + ") < pi(" +
                                          u.label(x) + "|" + u.format(menus[j]) + ")"});
        }
      }
    }
  }
  finish(report);
  return report;
}

CostFunction CostFunction::from_values(std::map<int, double> values) {
  if (values.empty()) throw InputError("cost table is empty");
  std::optional<double> previous;
  for (const auto& [n, v] : values) {
    if (n < 1) throw InputError("cost table sizes must be positive");
    if (!(v >= 0.0) || !std::isfinite(v)) throw InputError("costs must be finite and non-negative");
    if (previous && v <= *previous) throw InputError("cost table must be strictly increasing");
    previous = v;
  }
  CostFunction out;
  out.name_ = "table";
  out.values_ = std::move(values);
  return out;
}

CostFunction CostFunction::closed_form(std::string name, std::function<double(int)> fn) {
  if (!fn) throw InputError("closed-form cost needs a function");
  CostFunction out;
  out.name_ = std::move(name);
  out.fn_ = std::move(fn);
  return out;
}

CostFunction CostFunction::named(std::string_view name) {
  if (name == "square") return closed_form("square", [](int n) { return double(n) * n; });
  if (name == "cube") return closed_form("cube", [](int n) { return double(n) * n * n; });
  if (name == "exp2") return closed_form("exp2", [](int n) { return std::exp2(n); });
  if (name == "nlogn") return closed_form("nlogn", [](int n) { return n * std::log(double(n)); });
  if (name == "linear") return closed_form("linear", [](int n) { return double(n); });
  if (name == "sqrt") return closed_form("sqrt", [](int n) { return std::sqrt(double(n)); });
  throw ConfigError("unknown cost form '" + std::string(name) + "'");
}

std::optional<double> CostFunction::try_value(int n) const {
  if (fn_) return fn_(n);
  auto it = values_.find(n);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double CostFunction::operator()(int n) const {
  if (auto v = try_value(n)) return *v;
  throw InputError("cost function '" + name_ + "' is undefined at " + std::to_string(n));
}

std::vector<int> CostFunction::domain() const {
  std::vector<int> out;
  for (const auto& [n, _] : values_) out.push_back(n);
  return out;
}

JensenResult jensen_cost_check(const CostFunction& phi, int k) {
  if (k < 1 || k > 30) throw InputError("jensen_cost_check needs 1 <= k <= 30");
  JensenResult out;
  out.lhs = k * phi(2);
  out.rhs = phi(1 << k);
  out.strict_holds = out.lhs < out.rhs;
  return out;
}

ConvexityReport validate_convexity(const CostFunction& phi, int max_size) {
  // Collect runs of consecutive sizes.
  std::vector<std::vector<int>> runs;
  if (phi.is_table()) {
    for (int n : phi.domain()) {
      if (runs.empty() || runs.back().back() != n - 1) runs.emplace_back();
      runs.back().push_back(n);
    }
  } else {
    runs.emplace_back();
    for (int n = 1; n <= max_size; ++n) runs.back().push_back(n);
  }

  ConvexityReport report;
  bool any_run = false;
  for (const auto& run : runs) {
    if (run.size() < 3) continue;
    any_run = true;
    report.points += run.size();
    for (std::size_t i = 1; i < run.size(); ++i) {
      if (phi(run[i]) <= phi(run[i - 1])) report.non_increasing_at.push_back(run[i]);
    }
    for (std::size_t i = 1; i + 1 < run.size(); ++i) {
      const double left = phi(run[i]) - phi(run[i - 1]);
      const double right = phi(run[i + 1]) - phi(run[i]);
      if (right < left) report.non_convex_at.push_back(run[i]);
    }
  }
  if (!any_run) throw InputError("convexity check needs at least three consecutive sizes");
  report.increasing = report.non_increasing_at.empty();
  report.convex = report.non_convex_at.empty();
  return report;
}

}  // namespace ramseq
