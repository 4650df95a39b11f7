#include "pcminer/itemset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcminer {

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset::Itemset(std::initializer_list<ItemId> items)
    : Itemset(std::vector<ItemId>(items)) {}

bool Itemset::contains(ItemId item) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const noexcept {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Itemset Itemset::without_index(std::size_t pos) const {
  Itemset out;
  out.items_.reserve(items_.size() - 1);
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (i != pos) out.items_.push_back(items_[i]);
  return out;
}

std::string Itemset::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Itemset& x) {
  bool first = true;
  for (ItemId i : x) {
    if (!first) os << ' ';
    first = false;
    os << i;
  }
  return os;
}

std::vector<Itemset> non_empty_subsets(const Itemset& x) {
  if (x.size() >= 31) throw std::length_error("itemset too large to expand into subsets");
  const std::uint32_t n = static_cast<std::uint32_t>(x.size());
  std::vector<Itemset> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<ItemId> items;
    for (std::uint32_t b = 0; b < n; ++b)
      if (mask & (std::uint32_t{1} << b)) items.push_back(x[b]);
    out.emplace_back(std::move(items));
  }
  return out;
}

std::vector<Itemset> one_smaller_subsets(const Itemset& x) {
  std::vector<Itemset> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.without_index(i));
  return out;
}

std::vector<Itemset> maximal_elements(std::span<const Itemset> family) {
  // Larger sets first so each candidate only needs checking against kept ones.
  std::vector<Itemset> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end(), [](const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Itemset> kept;
  for (auto& s : sorted) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [&](const Itemset& k) { return s.is_subset_of(k); });
    if (!absorbed) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace pcminer
