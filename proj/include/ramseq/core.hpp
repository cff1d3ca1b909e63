#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramseq/error.hpp"

namespace ramseq {

/// Comparison tolerance for probabilities produced by the exact engine.
inline constexpr double kTolerance = 1e-9;

/// Largest universe the library will enumerate over.
inline constexpr std::size_t kMaxAlternatives = 16;

/// A subset of a universe, encoded as a bitmask over alternative indices.
///
/// Used for menus (non-empty, checked where required) and for consideration
/// sets (may be empty). Ordering is by integer code, which is also the order
/// in which subsets are enumerated and serialized.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ItemSet singleton(std::size_t index) {
    return ItemSet{std::uint32_t{1} << index};
  }
  static ItemSet of(std::initializer_list<std::size_t> indices);
  static ItemSet of(std::span<const std::size_t> indices);
  /// {0, 1, ..., n-1}
  static constexpr ItemSet first(std::size_t n) {
    return ItemSet{n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const {
    return index < 32 && ((bits_ >> index) & 1U) != 0;
  }
  constexpr bool is_subset_of(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ItemSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr ItemSet with(std::size_t index) const {
    return ItemSet{bits_ | (std::uint32_t{1} << index)};
  }
  constexpr ItemSet without(std::size_t index) const {
    return ItemSet{bits_ & ~(std::uint32_t{1} << index)};
  }
  constexpr ItemSet operator|(ItemSet o) const { return ItemSet{bits_ | o.bits_}; }
  constexpr ItemSet operator&(ItemSet o) const { return ItemSet{bits_ & o.bits_}; }
  /// Set difference.
  constexpr ItemSet operator-(ItemSet o) const { return ItemSet{bits_ & ~o.bits_}; }

  /// Member indices in ascending order.
  std::vector<std::size_t> members() const;

  constexpr auto operator<=>(const ItemSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// The finite ground set of alternatives with a strict utility ordering.
///
/// Alternatives are addressed by their position in `labels()`. Utilities are
/// required to be pairwise distinct; ties are rejected at construction.
class Universe {
 public:
  Universe(std::vector<std::string> labels, std::vector<double> utilities);
  Universe(std::initializer_list<std::pair<std::string, double>> entries);

  /// Alternatives named x1..xn with utilities taken from `utilities`.
  static Universe numbered(std::span<const double> utilities);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  double utility(std::size_t index) const { return utilities_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& utilities() const { return utilities_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  std::size_t index_of(std::string_view label) const;
  /// Throws InputError on unknown or repeated labels.
  ItemSet set_of(std::span<const std::string> labels) const;
  ItemSet set_of(std::initializer_list<std::string_view> labels) const;

  ItemSet all() const { return ItemSet::first(size()); }
  bool strictly_prefers(std::size_t x, std::size_t y) const {
    return utilities_.at(x) > utilities_.at(y);
  }
  /// Throws InputError when `set` reaches outside the universe.
  void check_within(ItemSet set) const;

  /// "{A,B,D}" in universe order.
  std::string format(ItemSet set) const;

  bool operator==(const Universe&) const = default;

 private:
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<double> utilities_;
};

/// Choice probabilities over a menu plus an explicit no-choice mass.
struct ChoiceDistribution {
  ItemSet menu;
  /// Indexed by universe position; entries outside `menu` are zero.
  std::vector<double> probabilities;
  double no_choice = 0.0;

  ChoiceDistribution() = default;
  ChoiceDistribution(ItemSet m, std::size_t universe_size)
      : menu(m), probabilities(universe_size, 0.0) {}

  double probability(std::size_t index) const {
    return index < probabilities.size() ? probabilities[index] : 0.0;
  }
  double total() const;
  /// Support inside the menu, masses in [0,1], total within `tolerance` of 1.
  bool is_valid(double tolerance = kTolerance) const;
};

/// Half the L1 distance, including the no-choice component.
double total_variation(const ChoiceDistribution& a, const ChoiceDistribution& b);

/// The strictly highest-utility member of `subset`; nullopt iff it is empty.
std::optional<std::size_t> max_preferred(const Universe& universe, ItemSet subset);

/// All subsets of `menu` in ascending bitmask order (the empty set first when
/// included). Throws CapacityError when |menu| > kMaxAlternatives.
std::vector<ItemSet> enumerate_subsets(ItemSet menu, bool include_empty);

}  // namespace ramseq
