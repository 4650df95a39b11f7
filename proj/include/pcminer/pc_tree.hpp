#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcminer/itemset.hpp"
#include "pcminer/prime_codec.hpp"

namespace pcminer {

using NodeId = std::uint32_t;
inline constexpr NodeId kRootNode = 0;

struct PCNode {
  TransactionValue value;          // unused for the root
  std::uint64_t local_count = 0;   // transactions encoding exactly to `value`
  std::uint64_t global_count = 0; // local_count + parent's global_count
  NodeId parent = kRootNode;
  std::vector<NodeId> children;    // creation order
};

/// Per-item support accumulated while inserting.
class ItemFrequencyTable {
 public:
  ItemFrequencyTable() = default;
  explicit ItemFrequencyTable(std::span<const ItemId> universe);

  std::uint64_t count(ItemId id) const noexcept;
  void increment(ItemId id) { ++counts_[id]; }
  const std::map<ItemId, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::map<ItemId, std::uint64_t> counts_;
};

struct TreeOptions {
  /// Keep the raw transaction multiset next to the tree so tests can
  /// check queries against ground truth.
  bool retain_transactions = false;
};

enum class TreeInvariant {
  LocalCountPositive,
  GlobalCountRecurrence,
  DivisibilityChain,
  ValueUniqueness,
  ParentLink,
  CountConservation,
  FrequencyBound,
  FactorCacheAgreement,
};

const char* to_string(TreeInvariant inv) noexcept;

struct TreeViolation {
  std::string node_value;
  TreeInvariant invariant;
  std::string detail;
};

/// Prime-encoded compressed tree. Every path below the root is a chain
/// descending under divisibility; each distinct transaction value occupies
/// exactly one node.
///
/// Construction is single-writer. Once built, all const members are safe to
/// call concurrently.
class PCTree {
 public:
  explicit PCTree(PrimeTable table, TreeOptions options = {});

  /// Throws InvalidArgument for an empty itemset and UnknownItemError for an
  /// item outside the table.
  void insert(const Itemset& x);

  /// Root children in creation order.
  std::vector<TransactionValue> heads() const;

  /// Number of inserted transactions containing every prime of `v`.
  std::uint64_t support(const TransactionValue& v) const;
  std::uint64_t support(const Itemset& x) const { return support(encode(x, table_)); }

  const ItemFrequencyTable& item_frequencies() const noexcept { return frequencies_; }
  std::uint64_t transaction_count() const noexcept { return transaction_count_; }
  const PrimeTable& prime_table() const noexcept { return table_; }

  /// Excludes the root.
  std::size_t node_count() const noexcept { return nodes_.size() - 1; }
  const PCNode& node(NodeId id) const { return nodes_.at(id); }
  /// Node holding exactly `v`, if any.
  std::optional<NodeId> find(const TransactionValue& v) const;

  /// Empty unless TreeOptions::retain_transactions was set.
  const std::vector<Itemset>& retained_transactions() const noexcept { return retained_; }

  std::vector<TreeViolation> validate() const;

 private:
  friend struct PCTreeTestAccess;

  void add_to_subtree_global(NodeId top, std::uint64_t delta);
  void refresh_global_counts(NodeId top);
  bool subtree_accepts(NodeId head, const TransactionValue& v) const;
  NodeId deepest_multiple(NodeId head, const TransactionValue& v) const;

  PrimeTable table_;
  TreeOptions options_;
  std::vector<PCNode> nodes_;
  std::map<mpz_class, NodeId> by_value_;
  ItemFrequencyTable frequencies_;
  std::uint64_t transaction_count_ = 0;
  std::vector<Itemset> retained_;
};

}  // namespace pcminer
