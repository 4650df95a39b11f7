#include "pcminer/transaction_db.hpp"

#include <algorithm>

namespace pcminer {

bool TransactionDB::add(Itemset items) {
  if (items.empty()) return false;
  for (ItemId i : items) {
    auto it = std::lower_bound(universe.begin(), universe.end(), i);
    if (it == universe.end() || *it != i) universe.insert(it, i);
  }
  const std::uint64_t tid = transactions.empty() ? 1 : transactions.back().tid + 1;
  transactions.push_back({tid, std::move(items)});
  return true;
}

PCTree build_tree(const TransactionDB& db, TreeOptions options) {
  PCTree tree(build_prime_table(db.universe), options);
  for (const auto& t : db.transactions) tree.insert(t.items);
  return tree;
}

}  // namespace pcminer
