#pragma once

// Shared fixtures and oracles for the test suites. The oracles here work on
// plain std containers and never call into the library under test.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pcminer/itemset.hpp"
#include "pcminer/transaction_db.hpp"

namespace pcminer::testing {

// Items A..F of the worked example as ids 0..5.
enum : ItemId { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5 };

inline std::vector<std::vector<ItemId>> example_rows() {
  return {
      {A, B, C, D, E}, {A, B, C, D, F}, {A, B, E}, {A, C, D, E},
      {C, D, F},       {A, C, D, F},    {A, C, D}, {C, D, F},
  };
}

inline TransactionDB example_db() {
  TransactionDB db;
  for (auto& r : example_rows()) db.add(Itemset(r));
  return db;
}

/// Transactions of `rows` that contain every item of `x`, by direct scan.
inline std::uint64_t oracle_support(const std::vector<std::vector<ItemId>>& rows,
                                    const std::vector<ItemId>& x) {
  std::uint64_t n = 0;
  for (const auto& r : rows) {
    std::set<ItemId> s(r.begin(), r.end());
    bool all = true;
    for (ItemId i : x) all = all && s.count(i) > 0;
    n += all ? 1 : 0;
  }
  return n;
}

/// Every non-empty itemset over the rows' items with support >= sigma,
/// enumerated by bitmask over the distinct items.
inline std::map<std::vector<ItemId>, std::uint64_t> oracle_frequent(
    const std::vector<std::vector<ItemId>>& rows, std::uint64_t sigma) {
  std::set<ItemId> universe;
  for (const auto& r : rows) universe.insert(r.begin(), r.end());
  std::vector<ItemId> items(universe.begin(), universe.end());
  std::map<std::vector<ItemId>, std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << items.size()); ++mask) {
    std::vector<ItemId> x;
    for (std::size_t b = 0; b < items.size(); ++b)
      if (mask >> b & 1) x.push_back(items[b]);
    auto s = oracle_support(rows, x);
    if (s >= sigma && s > 0) out[x] = s;
  }
  return out;
}

inline std::vector<std::vector<ItemId>> rows_of(const TransactionDB& db) {
  std::vector<std::vector<ItemId>> rows;
  for (const auto& t : db.transactions) rows.push_back(t.items.items());
  return rows;
}

template <class Map>
std::map<std::vector<ItemId>, std::uint64_t> plain(const Map& m) {
  std::map<std::vector<ItemId>, std::uint64_t> out;
  for (const auto& [x, s] : m) out[x.items()] = s;
  return out;
}

/// Random database: up to `max_items` items and `max_tx` non-empty rows.
inline TransactionDB random_db(std::mt19937_64& rng, std::uint32_t max_items, std::size_t max_tx) {
  std::uniform_int_distribution<std::uint32_t> n_items(1, max_items);
  std::uniform_int_distribution<std::size_t> n_tx(1, max_tx);
  std::uniform_real_distribution<double> dens(0.15, 0.7);
  const auto items = n_items(rng);
  const auto tx = n_tx(rng);
  const double p = dens(rng);
  std::bernoulli_distribution pick(p);
  std::uniform_int_distribution<std::uint32_t> any(0, items - 1);
  TransactionDB db;
  for (std::size_t t = 0; t < tx; ++t) {
    std::vector<ItemId> row;
    for (ItemId i = 0; i < items; ++i)
      if (pick(rng)) row.push_back(i * 3 + 1);  // sparse, non-contiguous ids
    if (row.empty()) row.push_back(any(rng) * 3 + 1);
    db.add(Itemset(row));
  }
  return db;
}

}  // namespace pcminer::testing
