#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramseq/attention.hpp"

namespace ramseq {

/// One failing instance of an axiom check.
struct AxiomWitness {
  std::vector<std::size_t> items;
  std::vector<ItemSet> menus;
  double observed = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct AxiomReport {
  std::string axiom;
  bool holds = true;
  std::vector<AxiomWitness> witnesses;
  std::size_t coverage = 0;
};

/// Binary consistency: pi(x | {x,y}) >= p_floor whenever x is preferred to y.
/// p_floor must exceed 0.5.
AxiomReport check_a1(const AttentionRule& rule, double p_floor);

/// Sequential transitivity under modal binary choice. Pairs whose two choice
/// probabilities tie (within tolerance) are reported as witnesses, since the
/// modal choice is undefined there.
AxiomReport check_a2(const AttentionRule& rule);

/// Attention monotonicity, via validate().
AxiomReport check_a3(const AttentionRule& rule);

/// pi(x|T) >= pi(x|S) for every pair of defined menus T proper subset of S
/// and every x in T.
AxiomReport check_a4(const AttentionRule& rule);

/// Cost of evaluating a set of a given size.
///
/// Either a table of values at listed sizes (checked strictly increasing at
/// construction) or a named closed form.
class CostFunction {
 public:
  static CostFunction from_values(std::map<int, double> values);
  static CostFunction closed_form(std::string name, std::function<double(int)> fn);
  /// "square", "cube", "exp2", "nlogn", "linear", "sqrt"; ConfigError otherwise.
  static CostFunction named(std::string_view name);

  const std::string& name() const { return name_; }
  bool is_table() const { return !fn_; }
  /// nullopt when a table does not cover n.
  std::optional<double> try_value(int n) const;
  /// Throws InputError when undefined at n.
  double operator()(int n) const;
  /// Sizes available for table forms; empty for closed forms.
  std::vector<int> domain() const;

 private:
  std::string name_;
  std::map<int, double> values_;
  std::function<double(int)> fn_;
};

struct JensenResult {
  double lhs = 0.0;  // k * phi(2)
  double rhs = 0.0;  // phi(2^k)
  bool strict_holds = false;
};

/// Cost of k binary stages against one stage over 2^k items. 1 <= k <= 30.
JensenResult jensen_cost_check(const CostFunction& phi, int k);

struct ConvexityReport {
  bool increasing = true;
  bool convex = true;
  std::size_t points = 0;
  /// Sizes n where phi(n) <= phi(n-1).
  std::vector<int> non_increasing_at;
  /// Sizes n where phi(n+1) - phi(n) < phi(n) - phi(n-1).
  std::vector<int> non_convex_at;
};

/// Discrete convexity and strict increase on consecutive integer points.
/// Tables are checked on their maximal runs of consecutive sizes; closed forms
/// on 1..max_size. Throws InputError when fewer than three consecutive points
/// are available.
ConvexityReport validate_convexity(const CostFunction& phi, int max_size = 32);

}  // namespace ramseq
