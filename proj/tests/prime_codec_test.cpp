#include "pcminer/prime_codec.hpp"

#include <random>

#include <gtest/gtest.h>

#include "pcminer/error.hpp"
#include "test_support.hpp"

namespace pcminer {
namespace {

using namespace pcminer::testing;

bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeTable example_table() {
  std::vector<ItemId> ids{A, B, C, D, E, F};
  return build_prime_table(ids);
}

TEST(FirstNPrimes, SmallCases) {
  EXPECT_TRUE(first_n_primes(0).empty());
  EXPECT_EQ(first_n_primes(6), (std::vector<Prime>{2, 3, 5, 7, 11, 13}));
  EXPECT_EQ(first_n_primes(10).back(), 29u);
}

TEST(FirstNPrimes, AgreesWithTrialDivision) {
  std::vector<Prime> expected;
  for (std::uint64_t n = 2; expected.size() < 2000; ++n)
    if (is_prime_naive(n)) expected.push_back(n);
  for (std::size_t n : {1u, 2u, 5u, 6u, 7u, 50u, 168u, 1000u, 2000u})
    EXPECT_EQ(first_n_primes(n), std::vector<Prime>(expected.begin(), expected.begin() + n)) << n;
}

TEST(PrimeTable, AssignsAscendingPrimesByItemId) {
  auto t = example_table();
  EXPECT_EQ(t.prime_of(A), 2u);
  EXPECT_EQ(t.prime_of(B), 3u);
  EXPECT_EQ(t.prime_of(C), 5u);
  EXPECT_EQ(t.prime_of(D), 7u);
  EXPECT_EQ(t.prime_of(E), 11u);
  EXPECT_EQ(t.prime_of(F), 13u);

  std::vector<ItemId> unordered{9, 3, 5};
  auto u = build_prime_table(unordered);
  EXPECT_EQ(u.prime_of(3), 2u);
  EXPECT_EQ(u.prime_of(5), 3u);
  EXPECT_EQ(u.prime_of(9), 5u);
  for (ItemId id : unordered) EXPECT_EQ(u.item_of(u.prime_of(id)), id);

  EXPECT_TRUE(build_prime_table({}).empty());
  EXPECT_THROW(u.prime_of(4), UnknownItemError);
  EXPECT_THROW(u.item_of(7), DecodeError);
}

TEST(Encode, WorkedExampleValues) {
  auto t = example_table();
  EXPECT_EQ(encode(Itemset{A, B, E}, t).value(), 66);
  EXPECT_EQ(encode(Itemset{}, t).value(), 1);
  EXPECT_EQ(encode(Itemset{A, B, C, D, E}, t).value(), 2310);

  const std::vector<long> tv{2310, 2730, 66, 770, 455, 910, 70, 455};
  auto rows = example_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    EXPECT_EQ(encode(Itemset(rows[i]), t).value(), tv[i]) << "TID " << i + 1;
}

TEST(Encode, UnknownItemIsRejected) {
  EXPECT_THROW(encode(Itemset{A, 42}, example_table()), UnknownItemError);
}

TEST(Decode, WorkedExampleValues) {
  auto t = example_table();
  for (bool cached : {true, false}) {
    auto v66 = encode(Itemset{A, B, E}, t);
    auto v910 = encode(Itemset{A, C, D, F}, t);
    if (!cached) {
      v66 = v66.without_cache();
      v910 = v910.without_cache();
    }
    EXPECT_EQ(decode(v66, t), (Itemset{A, B, E}));
    EXPECT_EQ(decode(v910, t), (Itemset{A, C, D, F}));
  }
  EXPECT_EQ(decode(TransactionValue::from_integer(std::uint64_t{1}), t), Itemset{});
  EXPECT_EQ(decode(TransactionValue::from_integer(std::uint64_t{910}), t), (Itemset{A, C, D, F}));
}

TEST(Decode, ForeignOrRepeatedPrimeIsRejected) {
  auto t = example_table();
  EXPECT_THROW(decode(TransactionValue::from_integer(std::uint64_t{17}), t), DecodeError);
  EXPECT_THROW(decode(TransactionValue::from_integer(std::uint64_t{2 * 17}), t), DecodeError);
  EXPECT_THROW(decode(TransactionValue::from_integer(std::uint64_t{4}), t), DecodeError);
  EXPECT_THROW(TransactionValue::from_integer(mpz_class(0)), InvalidArgument);
}

TEST(Divides, Examples) {
  auto t = example_table();
  auto v = [](std::uint64_t x) { return TransactionValue::from_integer(x); };
  EXPECT_TRUE(divides(v(66), v(2310)));
  EXPECT_TRUE(divides(v(455), v(455)));
  EXPECT_FALSE(divides(v(455), v(770)));
  EXPECT_TRUE(divides(encode(Itemset{A, B, E}, t), encode(Itemset{A, B, C, D, E}, t)));
  EXPECT_FALSE(divides(encode(Itemset{C, D, F}, t), encode(Itemset{A, C, D, E}, t)));
}

// Exhaustive over all pairs of subsets of a 12-item universe.
TEST(CodecProperties, SubsetEquivalenceExhaustive12) {
  std::vector<ItemId> universe;
  for (ItemId i = 0; i < 12; ++i) universe.push_back(i * 7 + 3);
  auto t = build_prime_table(universe);

  std::vector<Itemset> all;
  std::vector<TransactionValue> enc;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    std::vector<ItemId> x;
    for (std::uint32_t b = 0; b < 12; ++b)
      if (mask >> b & 1) x.push_back(universe[b]);
    all.emplace_back(x);
    enc.push_back(encode(all.back(), t));
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    ASSERT_EQ(decode(enc[i], t), all[i]);
    ASSERT_EQ(decode_by_division(enc[i].value(), t), all[i]);
  }

  // Pairs on a stride keep the runtime sane while still hitting every set.
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (int rep = 0; rep < 64; ++rep) {
      const std::size_t j = pick(rng);
      const bool subset = all[i].is_subset_of(all[j]);
      ASSERT_EQ(divides(enc[i], enc[j]), subset);
      ASSERT_EQ(divides_by_value(enc[i], enc[j]), subset);
      if (subset && all[i] != all[j]) ASSERT_LT(enc[i].value(), enc[j].value());
    }
  }
}

TEST(CodecProperties, SquareFree) {
  std::vector<ItemId> universe;
  for (ItemId i = 0; i < 40; ++i) universe.push_back(i);
  auto t = build_prime_table(universe);
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<ItemId> x;
    for (ItemId i : universe)
      if (coin(rng)) x.push_back(i);
    auto v = encode(Itemset(x), t);
    for (Prime p : t.primes()) {
      mpz_class sq = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
      ASSERT_FALSE(mpz_divisible_p(v.value().get_mpz_t(), sq.get_mpz_t()));
    }
  }
}

TEST(CodecProperties, WideTransactionsExceed64Bits) {
  std::vector<ItemId> universe;
  for (ItemId i = 0; i < 100; ++i) universe.push_back(i);
  auto t = build_prime_table(universe);
  Itemset wide(std::vector<ItemId>(universe.begin(), universe.begin() + 16));
  auto v = encode(wide, t);
  EXPECT_GT(mpz_sizeinbase(v.value().get_mpz_t(), 2), 64u);
  EXPECT_EQ(v.to_string(), "32589158477190044730");
  EXPECT_EQ(decode_by_division(v.value(), t), wide);

  Itemset all(universe);
  auto big = encode(all, t);
  EXPECT_EQ(decode(big.without_cache(), t), all);
  EXPECT_TRUE(divides(v, big));
  EXPECT_TRUE(divides(v.without_cache(), big));
}

}  // namespace
}  // namespace pcminer
