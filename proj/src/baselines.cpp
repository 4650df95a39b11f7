#include "pcminer/baselines.hpp"

#include <algorithm>
#include <set>

#include "pcminer/error.hpp"

namespace pcminer {

namespace {

std::uint64_t effective_sigma(SupportThreshold s) { return std::max<std::uint64_t>(s.sigma, 1); }

}  // namespace

BaselineResult brute_force_mine(const TransactionDB& db, SupportThreshold s) {
  const std::size_t n = db.universe.size();
  if (n > kBruteForceMaxItems)
    throw GuardError("brute force refuses " + std::to_string(n) + " items (limit " +
                     std::to_string(kBruteForceMaxItems) + ")");

  const std::uint64_t sigma = effective_sigma(s);
  std::vector<std::uint32_t> masks;
  masks.reserve(db.size());
  for (const auto& t : db.transactions) {
    std::uint32_t m = 0;
    for (ItemId i : t.items) {
      auto pos = std::lower_bound(db.universe.begin(), db.universe.end(), i) - db.universe.begin();
      m |= std::uint32_t{1} << pos;
    }
    masks.push_back(m);
  }

  BaselineResult out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  out.candidates_generated = limit - 1;
  for (std::uint32_t cand = 1; cand < limit; ++cand) {
    std::uint64_t support = 0;
    for (auto m : masks)
      if ((m & cand) == cand) ++support;
    if (support < sigma) continue;
    std::vector<ItemId> items;
    for (std::size_t b = 0; b < n; ++b)
      if (cand & (std::uint32_t{1} << b)) items.push_back(db.universe[b]);
    out.frequent.emplace(Itemset(std::move(items)), support);
  }
  return out;
}

BaselineResult apriori_mine(const TransactionDB& db, SupportThreshold s) {
  const std::uint64_t sigma = effective_sigma(s);
  BaselineResult out;

  std::map<ItemId, std::uint64_t> item_counts;
  for (const auto& t : db.transactions)
    for (ItemId i : t.items) ++item_counts[i];

  std::vector<Itemset> level;  // F(k-1), lexicographic
  for (const auto& [id, c] : item_counts) {
    if (c < sigma) continue;
    level.push_back(Itemset{id});
    out.frequent.emplace(Itemset{id}, c);
  }

  while (level.size() >= 2) {
    const std::set<Itemset> previous(level.begin(), level.end());
    std::vector<Itemset> candidates;

    // Join pairs that agree on all but the last item.
    for (std::size_t a = 0; a < level.size(); ++a) {
      const auto& x = level[a].items();
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        const auto& y = level[b].items();
        if (!std::equal(x.begin(), x.end() - 1, y.begin())) break;
        std::vector<ItemId> joined(x);
        joined.push_back(y.back());
        Itemset c(std::move(joined));
        bool all_frequent = true;
        for (std::size_t i = 0; i < c.size() && all_frequent; ++i)
          all_frequent = previous.contains(c.without_index(i));
        if (all_frequent) candidates.push_back(std::move(c));
      }
    }

    out.candidates_generated += candidates.size();
    std::vector<std::uint64_t> counts(candidates.size(), 0);
    for (const auto& t : db.transactions)
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].is_subset_of(t.items)) ++counts[i];

    level.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (counts[i] >= sigma) {
        level.push_back(candidates[i]);
        out.frequent.emplace(candidates[i], counts[i]);
      }
      out.candidates.push_back(std::move(candidates[i]));
    }
  }
  return out;
}

}  // namespace pcminer
