#include "ramseq/arity.hpp"

#include <cmath>

namespace ramseq {

ArityParams::ArityParams(std::map<int, double> alpha, std::map<int, double> beta) {
  for (const auto& [k, a] : alpha) {
    check(k, a, "alpha");
    alpha_[k] = a;
  }
  for (const auto& [k, b] : beta) {
    check(k, b, "beta");
    beta_[k] = b;
  }
}

ArityParams ArityParams::homogeneous(double p, std::initializer_list<int> arities) {
  ArityParams out;
  for (int k : arities) out.set(k, p, 1.0);
  return out;
}

ArityParams& ArityParams::set(int arity, double alpha, double beta) {
  check(arity, alpha, "alpha");
  check(arity, beta, "beta");
  alpha_[arity] = alpha;
  beta_[arity] = beta;
  return *this;
}

void ArityParams::check(int arity, double value, const char* what) {
  if (arity < 2) throw InputError("arity must be at least 2, got " + std::to_string(arity));
  if (!(value > 0.0 && value <= 1.0)) {
    throw InputError(std::string(what) + "_" + std::to_string(arity) + " must lie in (0, 1]");
  }
}

double ArityParams::alpha(int arity) const {
  auto it = alpha_.find(arity);
  if (it == alpha_.end()) throw InputError("no alpha for arity " + std::to_string(arity));
  return it->second;
}

double ArityParams::beta(int arity) const {
  auto it = beta_.find(arity);
  if (it == beta_.end()) throw InputError("no beta for arity " + std::to_string(arity));
  return it->second;
}

double sim_success(const ArityParams& params, int n) {
  return std::pow(params.alpha(n), n) * params.beta(n);
}

double seq_success(const ArityParams& params, int n) {
  if (n < 2) throw InputError("a tournament needs at least two items");
  const double a = params.alpha(2);
  return std::pow(a * a * params.beta(2), n - 1);
}

namespace {

Verdict compare(double seq, double sim) {
  if (std::abs(seq - sim) < kClosedFormTieTolerance) return Verdict::tie;
  return seq > sim ? Verdict::seq_dominant : Verdict::sim_dominant;
}

}  // namespace

DominanceResult general_n_dominance(const ArityParams& params, int n) {
  if (n < 3) throw InputError("general_n_dominance needs n >= 3");
  DominanceResult out;
  out.seq = seq_success(params, n);
  out.sim = sim_success(params, n);
  out.verdict = compare(out.seq, out.sim);
  out.holds = out.verdict != Verdict::sim_dominant;
  // (seq/sim)^(1/(2(n-1))), written in the alpha/beta ratio form.
  const double stages = n - 1;
  out.multiplicative_margin =
      (params.alpha(2) / std::pow(params.alpha(n), n / (2.0 * stages))) *
      std::sqrt(params.beta(2) / std::pow(params.beta(n), 1.0 / stages));
  return out;
}

DominanceResult dominance_condition(const ArityParams& params) {
  return general_n_dominance(params, 3);
}

double binary_advantage_threshold(double alpha3) { return binary_advantage_threshold(alpha3, 3); }

double binary_advantage_threshold(double alpha_n, int n) {
  if (!(alpha_n > 0.0 && alpha_n <= 1.0)) throw InputError("threshold needs alpha in (0, 1]");
  if (n < 3) throw InputError("threshold needs n >= 3");
  return std::pow(alpha_n, n / (2.0 * (n - 1)));
}

SuperiorityResult superiority_qr(double q, double r) {
  if (!(q > 0.0 && q < 1.0) || !(r > 0.0 && r < 1.0)) {
    throw InputError("superiority_qr needs q, r in (0, 1)");
  }
  SuperiorityResult out;
  out.q_squared = q * q;
  out.holds = compare(out.q_squared, r) == Verdict::seq_dominant;
  return out;
}

FidelityModel::Form parse_fidelity_form(std::string_view name) {
  if (name == "power") return FidelityModel::Form::power;
  if (name == "hyperbolic") return FidelityModel::Form::hyperbolic;
  throw ConfigError("unknown fidelity form '" + std::string(name) + "'");
}

const char* to_string(FidelityModel::Form form) {
  return form == FidelityModel::Form::power ? "power" : "hyperbolic";
}

FidelityModel::FidelityModel(double alpha, Form form) : alpha_(alpha), form_(form) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("fidelity alpha must lie in [0, 1]");
}

FidelityModel::FidelityModel(double alpha, std::string_view form_name)
    : FidelityModel(alpha, parse_fidelity_form(form_name)) {}

double FidelityModel::operator()(int set_size) const {
  if (set_size < 1) throw InputError("fidelity needs a set size of at least 1");
  const double extra = set_size - 1;
  switch (form_) {
    case Form::power: return std::pow(alpha_, extra);
    case Form::hyperbolic: return 1.0 / (1.0 + (1.0 - alpha_) * extra);
  }
  return 0.0;
}

}  // namespace ramseq
