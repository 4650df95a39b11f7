#pragma once

// Items map to primes, itemsets map to the product of their primes
// ("transaction values"), and subset tests become divisibility tests.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "pcminer/itemset.hpp"

namespace pcminer {

using Prime = std::uint64_t;

/// First `n` primes in ascending order.
std::vector<Prime> first_n_primes(std::size_t n);

/// Injective ItemId -> prime map. Ids in ascending order receive
/// 2, 3, 5, ... in order. Immutable once built.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  /// Ids in ascending order; rank r pairs with primes()[r].
  std::span<const ItemId> ids() const noexcept { return ids_; }
  std::span<const Prime> primes() const noexcept { return primes_; }

  std::optional<std::size_t> rank_of(ItemId id) const noexcept;
  std::optional<std::size_t> rank_of_prime(Prime p) const noexcept;

  /// Throws UnknownItemError.
  Prime prime_of(ItemId id) const;
  /// Throws DecodeError for a prime not in the table.
  ItemId item_of(Prime p) const;

  friend PrimeTable build_prime_table(std::span<const ItemId> universe);

 private:
  std::vector<ItemId> ids_;
  std::vector<Prime> primes_;
  std::unordered_map<Prime, std::size_t> rank_by_prime_;
};

/// Duplicates in `universe` are ignored.
PrimeTable build_prime_table(std::span<const ItemId> universe);

/// Product of distinct primes. The integer is authoritative; the sorted
/// rank list (indices into the PrimeTable) is an optional cache that speeds
/// up divisibility and decoding and must always agree with the integer.
class TransactionValue {
 public:
  /// The empty product, 1.
  TransactionValue() : value_(1), ranks_(std::vector<std::uint32_t>{}) {}

  /// A bare integer with no factor cache. Throws InvalidArgument if < 1.
  static TransactionValue from_integer(const mpz_class& v);
  static TransactionValue from_integer(std::uint64_t v);
  /// Base-10 string.
  static TransactionValue from_string(const std::string& decimal);

  const mpz_class& value() const noexcept { return value_; }
  bool is_one() const { return value_ == 1; }

  bool has_factor_cache() const noexcept { return ranks_.has_value(); }
  /// Sorted prime ranks; only meaningful when has_factor_cache().
  std::span<const std::uint32_t> factor_ranks() const noexcept;

  /// Same integer without the cache.
  TransactionValue without_cache() const { return from_integer(value_); }

  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const TransactionValue& a, const TransactionValue& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const TransactionValue& a, const TransactionValue& b) {
    return a.value_ < b.value_;
  }

  friend TransactionValue encode(const Itemset& x, const PrimeTable& t);

 private:
  TransactionValue(mpz_class v, std::optional<std::vector<std::uint32_t>> ranks)
      : value_(std::move(v)), ranks_(std::move(ranks)) {}

  mpz_class value_;
  std::optional<std::vector<std::uint32_t>> ranks_;
};

/// Throws UnknownItemError if an item is missing from `t`.
TransactionValue encode(const Itemset& x, const PrimeTable& t);

/// Uses the factor cache when present, otherwise trial division.
/// Throws DecodeError on a foreign or repeated prime.
Itemset decode(const TransactionValue& v, const PrimeTable& t);

/// Always factors the integer by trial division over the table's primes.
Itemset decode_by_division(const mpz_class& v, const PrimeTable& t);

/// True iff q divides p, i.e. decode(q) ⊆ decode(p). Uses the rank caches
/// when both sides carry one.
bool divides(const TransactionValue& q, const TransactionValue& p);

/// Integer-only divisibility, ignoring caches.
bool divides_by_value(const TransactionValue& q, const TransactionValue& p);

}  // namespace pcminer
