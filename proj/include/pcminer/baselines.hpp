#pragma once

// Reference miners used as oracles for the tree miner.

#include <cstdint>
#include <vector>

#include "pcminer/pc_miner.hpp"
#include "pcminer/transaction_db.hpp"

namespace pcminer {

struct BaselineResult {
  FrequentMap frequent;
  std::uint64_t candidates_generated = 0;
  /// Apriori only: every counted candidate of size >= 2, in generation order.
  std::vector<Itemset> candidates;
};

inline constexpr std::size_t kBruteForceMaxItems = 24;

/// Counts every non-empty itemset over the universe by scanning all
/// transactions. Throws GuardError above kBruteForceMaxItems items.
BaselineResult brute_force_mine(const TransactionDB& db, SupportThreshold s);

/// Level-wise Apriori: prefix join of F(k-1), all-subsets-frequent prune,
/// counting by per-transaction subset test. candidates_generated counts
/// candidates of size >= 2 only.
BaselineResult apriori_mine(const TransactionDB& db, SupportThreshold s);

}  // namespace pcminer
