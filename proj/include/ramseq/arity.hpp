#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ramseq/sequential.hpp"

namespace ramseq {

/// Closed-form comparisons whose two sides differ by less than this are ties.
inline constexpr double kClosedFormTieTolerance = 1e-12;

/// Per-arity attention (alpha_k) and conditional accuracy (beta_k).
class ArityParams {
 public:
  ArityParams() = default;
  ArityParams(std::map<int, double> alpha, std::map<int, double> beta);

  /// alpha_k = p and beta_k = 1 for every listed arity.
  static ArityParams homogeneous(double p, std::initializer_list<int> arities);

  ArityParams& set(int arity, double alpha, double beta = 1.0);

  double alpha(int arity) const;
  double beta(int arity) const;
  bool has(int arity) const { return alpha_.contains(arity) && beta_.contains(arity); }

 private:
  static void check(int arity, double value, const char* what);

  std::map<int, double> alpha_;
  std::map<int, double> beta_;
};

/// One-shot evaluation of n items: alpha_n^n * beta_n.
double sim_success(const ArityParams& params, int n);
/// Binary tournament over n items: (alpha_2^2 * beta_2)^(n-1).
double seq_success(const ArityParams& params, int n);

struct DominanceResult {
  double seq = 0.0;  // left-hand side
  double sim = 0.0;  // right-hand side
  /// Weak dominance of the tournament; boundary ties count as holding.
  bool holds = false;
  Verdict verdict = Verdict::tie;
  /// (alpha2 / alpha_n^(n/(2(n-1)))) * sqrt(beta2 / beta_n^(1/(n-1))); >= 1 iff holds.
  double multiplicative_margin = 1.0;
};

/// alpha2^4 beta2^2 >= alpha3^3 beta3.
DominanceResult dominance_condition(const ArityParams& params);
/// alpha2^(2(n-1)) beta2^(n-1) >= alpha_n^n beta_n, n >= 3.
DominanceResult general_n_dominance(const ArityParams& params, int n);

/// alpha3^(3/4): the smallest alpha2 (at equal beta) that makes the
/// two-stage tournament weakly dominate.
double binary_advantage_threshold(double alpha3);
/// General form alpha_n^(n / (2(n-1))).
double binary_advantage_threshold(double alpha_n, int n);

struct SuperiorityResult {
  bool holds = false;  // q^2 > r strictly
  double q_squared = 0.0;
};

/// Two binary stages with accuracy q versus one ternary stage with accuracy r.
SuperiorityResult superiority_qr(double q, double r);

/// Bounded-rationality operator Pr(C_alpha(S) = max) = Phi(|S|, alpha).
class FidelityModel {
 public:
  enum class Form {
    /// alpha^(n-1)
    power,
    /// 1 / (1 + (1 - alpha)(n - 1))
    hyperbolic,
  };

  explicit FidelityModel(double alpha, Form form = Form::power);
  /// Throws ConfigError for an unknown form name.
  FidelityModel(double alpha, std::string_view form_name);

  double alpha() const { return alpha_; }
  Form form() const { return form_; }

  /// Phi(n, alpha) for n >= 1.
  double operator()(int set_size) const;

 private:
  double alpha_;
  Form form_;
};

FidelityModel::Form parse_fidelity_form(std::string_view name);
const char* to_string(FidelityModel::Form form);

}  // namespace ramseq
