#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcminer/itemset.hpp"
#include "pcminer/pc_tree.hpp"

namespace pcminer {

/// Absolute minimum support count.
struct SupportThreshold {
  std::uint64_t sigma = 0;
};

using FrequentMap = std::map<Itemset, std::uint64_t>;

struct MiningResult {
  FrequentMap frequent;            // never contains the empty itemset
  std::vector<Itemset> maximal;    // lexicographic order
  std::uint64_t candidates_examined = 0;
  SupportThreshold sigma;
  /// Every candidate whose support was evaluated, in evaluation order.
  std::vector<Itemset> examined;
  /// Candidate head set the run started from.
  std::vector<Itemset> head_set;
  std::vector<std::string> warnings;
};

struct MineOptions {
  /// Worker threads for support evaluation within one level; 1 = sequential.
  unsigned threads = 1;
};

/// `head` stripped of every item whose support is below sigma.
Itemset candidate_head(const Itemset& head, const ItemFrequencyTable& freq, SupportThreshold s);

/// Candidate heads of every root child, empty ones dropped, reduced to an
/// antichain. Lexicographic order.
std::vector<Itemset> candidate_head_set(const PCTree& tree, SupportThreshold s);

/// ⊆-maximal members of a downward closed family.
std::vector<Itemset> maximal_frequent(const std::vector<Itemset>& frequent);

/// Mines the complete frequent-itemset map from the tree.
///
/// Frequent 1-itemsets come straight from the item frequency table. The
/// candidate head set is then processed level by level, largest size first.
/// A candidate that is not already known frequent gets exactly one support
/// query (counted in candidates_examined); when frequent all its subsets are
/// frequent, otherwise its (k-1)-subsets join the pool while k > 2. Supports
/// for every frequent itemset are filled in afterwards without touching the
/// counter.
///
/// sigma = 0 is mined as sigma = 1 and produces a warning.
MiningResult mine(const PCTree& tree, SupportThreshold s, const MineOptions& options = {});

}  // namespace pcminer
