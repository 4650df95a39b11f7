#include "pcminer/pc_miner.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace pcminer {

namespace {

// Applies fn(i) for i in [0, n) over `threads` workers. fn must only touch
// slot i of its output.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
}

// Inserts x and everything below it; stops at anything already present since
// the set is kept downward closed.
void add_with_subsets(std::set<Itemset>& family, const Itemset& x) {
  if (x.empty() || !family.insert(x).second) return;
  if (x.size() == 1) return;
  for (std::size_t i = 0; i < x.size(); ++i) add_with_subsets(family, x.without_index(i));
}

}  // namespace

Itemset candidate_head(const Itemset& head, const ItemFrequencyTable& freq, SupportThreshold s) {
  std::vector<ItemId> kept;
  for (ItemId i : head)
    if (freq.count(i) >= s.sigma) kept.push_back(i);
  return Itemset(std::move(kept));
}

std::vector<Itemset> candidate_head_set(const PCTree& tree, SupportThreshold s) {
  std::vector<Itemset> heads;
  for (const auto& v : tree.heads()) {
    Itemset h = candidate_head(decode(v, tree.prime_table()), tree.item_frequencies(), s);
    if (!h.empty()) heads.push_back(std::move(h));
  }
  return maximal_elements(heads);
}

std::vector<Itemset> maximal_frequent(const std::vector<Itemset>& frequent) {
  return maximal_elements(frequent);
}

MiningResult mine(const PCTree& tree, SupportThreshold s, const MineOptions& options) {
  MiningResult result;
  result.sigma = s;
  SupportThreshold effective = s;
  if (effective.sigma == 0) {
    effective.sigma = 1;
    result.warnings.emplace_back("min_sup 0 admits unsupported itemsets; mining with min_sup 1");
  }

  std::set<Itemset> frequent;
  for (const auto& [id, count] : tree.item_frequencies().counts())
    if (count >= effective.sigma) frequent.insert(Itemset{id});

  result.head_set = candidate_head_set(tree, effective);

  std::map<std::size_t, std::set<Itemset>> pool;
  std::size_t k_max = 0;
  for (const auto& h : result.head_set) {
    pool[h.size()].insert(h);
    k_max = std::max(k_max, h.size());
  }

  const auto& table = tree.prime_table();
  for (std::size_t k = k_max; k >= 2; --k) {
    std::vector<Itemset> todo;
    for (const auto& f : pool[k])
      if (!frequent.contains(f)) todo.push_back(f);

    // Candidates at one level cannot make each other frequent, so their
    // supports are independent and may be evaluated in any order.
    std::vector<std::uint64_t> supports(todo.size());
    parallel_for(todo.size(), options.threads,
                 [&](std::size_t i) { supports[i] = tree.support(encode(todo[i], table)); });

    for (std::size_t i = 0; i < todo.size(); ++i) {
      const Itemset& f = todo[i];
      ++result.candidates_examined;
      result.examined.push_back(f);
      if (supports[i] >= effective.sigma) {
        add_with_subsets(frequent, f);
      } else if (k > 2) {
        for (auto& sub : one_smaller_subsets(f)) pool[k - 1].insert(std::move(sub));
      }
    }
  }

  std::vector<Itemset> keys(frequent.begin(), frequent.end());
  std::vector<std::uint64_t> supports(keys.size());
  parallel_for(keys.size(), options.threads,
               [&](std::size_t i) { supports[i] = tree.support(encode(keys[i], table)); });
  for (std::size_t i = 0; i < keys.size(); ++i) result.frequent.emplace_hint(result.frequent.end(), keys[i], supports[i]);

  result.maximal = maximal_frequent(keys);
  return result;
}

}  // namespace pcminer
