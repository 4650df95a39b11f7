#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pcminer {

using ItemId = std::uint32_t;

/// A canonical set of items: strictly ascending, duplicate free.
class Itemset {
 public:
  Itemset() = default;

  /// Sorts and deduplicates.
  explicit Itemset(std::vector<ItemId> items);
  Itemset(std::initializer_list<ItemId> items);

  const std::vector<ItemId>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  ItemId operator[](std::size_t i) const { return items_[i]; }

  bool contains(ItemId item) const noexcept;
  bool is_subset_of(const Itemset& other) const noexcept;

  /// Copy without the element at position `pos`.
  Itemset without_index(std::size_t pos) const;

  /// Space separated ids, e.g. "0 2 3".
  std::string to_string() const;

  // Lexicographic on the id sequence.
  friend auto operator<=>(const Itemset&, const Itemset&) = default;
  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> items_;
};

std::ostream& operator<<(std::ostream& os, const Itemset& x);

/// All non-empty subsets of `x`.
std::vector<Itemset> non_empty_subsets(const Itemset& x);

/// All subsets of `x` with exactly |x| - 1 items.
std::vector<Itemset> one_smaller_subsets(const Itemset& x);

/// The ⊆-maximal members of `family` (duplicates collapse).
std::vector<Itemset> maximal_elements(std::span<const Itemset> family);

}  // namespace pcminer
