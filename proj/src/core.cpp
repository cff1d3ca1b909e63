#include "ramseq/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ramseq {

ItemSet ItemSet::of(std::initializer_list<std::size_t> indices) {
  return of(std::span<const std::size_t>(indices.begin(), indices.size()));
}

ItemSet ItemSet::of(std::span<const std::size_t> indices) {
  ItemSet set;
  for (std::size_t i : indices) {
    if (i >= 32) throw CapacityError("item index out of range: " + std::to_string(i));
    set = set.with(i);
  }
  return set;
}

std::vector<std::size_t> ItemSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Universe::Universe(std::vector<std::string> labels, std::vector<double> utilities)
    : labels_(std::move(labels)), utilities_(std::move(utilities)) {
  validate();
}

Universe::Universe(std::initializer_list<std::pair<std::string, double>> entries) {
  for (const auto& [label, u] : entries) {
    labels_.push_back(label);
    utilities_.push_back(u);
  }
  validate();
}

Universe Universe::numbered(std::span<const double> utilities) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < utilities.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
  return Universe(std::move(labels), std::vector<double>(utilities.begin(), utilities.end()));
}

void Universe::validate() const {
  if (labels_.size() != utilities_.size()) {
    throw InputError("universe: label and utility counts differ");
  }
  if (labels_.empty()) throw InputError("universe: at least one alternative is required");
  if (labels_.size() > kMaxAlternatives) {
    throw CapacityError("universe: at most " + std::to_string(kMaxAlternatives) +
                        " alternatives are supported, got " + std::to_string(labels_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("universe: empty alternative label");
    if (!seen.insert(label).second) throw InputError("universe: duplicate label '" + label + "'");
  }
  for (double u : utilities_) {
    if (!std::isfinite(u)) throw InputError("universe: utilities must be finite");
  }
  std::vector<double> sorted = utilities_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("universe: utilities must be pairwise distinct");
  }
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown alternative '" + std::string(label) + "'");
}

ItemSet Universe::set_of(std::span<const std::string> labels) const {
  ItemSet set;
  for (const auto& label : labels) {
    std::size_t i = index_of(label);
    if (set.contains(i)) throw InputError("alternative '" + label + "' listed twice");
    set = set.with(i);
  }
  return set;
}

ItemSet Universe::set_of(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> copy(labels.begin(), labels.end());
  return set_of(copy);
}

void Universe::check_within(ItemSet set) const {
  if (!set.is_subset_of(all())) {
    throw InputError("set refers to alternatives outside the universe");
  }
}

std::string Universe::format(ItemSet set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.members()) {
    if (!first) out += ',';
    out += i < size() ? labels_[i] : "#" + std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

double ChoiceDistribution::total() const {
  double sum = no_choice;
  for (double p : probabilities) sum += p;
  return sum;
}

bool ChoiceDistribution::is_valid(double tolerance) const {
  if (no_choice < -tolerance || no_choice > 1.0 + tolerance) return false;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    double p = probabilities[i];
    if (p < -tolerance || p > 1.0 + tolerance) return false;
    if (p > tolerance && !menu.contains(i)) return false;
  }
  return std::abs(total() - 1.0) <= tolerance;
}

double total_variation(const ChoiceDistribution& a, const ChoiceDistribution& b) {
  std::size_t n = std::max(a.probabilities.size(), b.probabilities.size());
  double sum = std::abs(a.no_choice - b.no_choice);
  for (std::size_t i = 0; i < n; ++i) sum += std::abs(a.probability(i) - b.probability(i));
  return 0.5 * sum;
}

std::optional<std::size_t> max_preferred(const Universe& universe, ItemSet subset) {
  universe.check_within(subset);
  std::optional<std::size_t> best;
  for (std::size_t i : subset.members()) {
    if (!best || universe.utility(i) > universe.utility(*best)) best = i;
  }
  return best;
}

std::vector<ItemSet> enumerate_subsets(ItemSet menu, bool include_empty) {
  if (menu.size() > kMaxAlternatives) {
    throw CapacityError("enumerate_subsets: menu has " + std::to_string(menu.size()) +
                        " members, limit is " + std::to_string(kMaxAlternatives));
  }
  std::vector<ItemSet> out;
  out.reserve((std::size_t{1} << menu.size()) - (include_empty ? 0 : 1));
  // Ascending walk over submasks of `menu`.
  const std::uint32_t m = menu.bits();
  std::uint32_t sub = 0;
  while (true) {
    if (sub != 0 || include_empty) out.emplace_back(sub);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
  return out;
}

}  // namespace ramseq
