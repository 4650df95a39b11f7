#pragma once

#include <cstdint>
#include <vector>

#include "pcminer/itemset.hpp"
#include "pcminer/pc_tree.hpp"

namespace pcminer {

struct Transaction {
  std::uint64_t tid = 0;
  Itemset items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Horizontal database. Tids ascend from 1; no transaction is empty.
struct TransactionDB {
  std::vector<Transaction> transactions;
  std::vector<ItemId> universe;  // ascending, union of all items

  std::size_t size() const noexcept { return transactions.size(); }

  /// Appends with the next tid and widens the universe. Empty itemsets are
  /// ignored and reported by returning false.
  bool add(Itemset items);

  friend bool operator==(const TransactionDB&, const TransactionDB&) = default;
};

/// One scan over `db`: prime table over its universe, then every transaction
/// inserted in tid order.
PCTree build_tree(const TransactionDB& db, TreeOptions options = {});

}  // namespace pcminer
