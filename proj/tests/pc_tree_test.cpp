#include "pcminer/pc_tree.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "pcminer/error.hpp"
#include "test_support.hpp"

namespace pcminer {

struct PCTreeTestAccess {
  static std::vector<PCNode>& nodes(PCTree& t) { return t.nodes_; }
};

namespace {

using namespace pcminer::testing;

PCTree example_tree() { return build_tree(example_db(), {.retain_transactions = true}); }

std::vector<std::string> head_strings(const PCTree& t) {
  std::vector<std::string> out;
  for (const auto& h : t.heads()) out.push_back(h.to_string());
  return out;
}

const PCNode& node_with(const PCTree& t, std::uint64_t v) {
  auto id = t.find(TransactionValue::from_integer(v));
  EXPECT_TRUE(id.has_value()) << v;
  return t.node(*id);
}

TEST(PCTree, NewTreeIsEmpty) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B, C}));
  EXPECT_TRUE(t.heads().empty());
  EXPECT_EQ(t.transaction_count(), 0u);
  EXPECT_EQ(t.node_count(), 0u);
  EXPECT_EQ(t.support(TransactionValue::from_integer(std::uint64_t{6})), 0u);
  EXPECT_EQ(t.support(TransactionValue{}), 0u);
  for (const auto& [id, c] : t.item_frequencies().counts()) EXPECT_EQ(c, 0u) << id;
  EXPECT_TRUE(t.validate().empty());
}

TEST(PCTree, WorkedExampleShape) {
  auto t = example_tree();
  EXPECT_EQ(t.node_count(), 7u);
  EXPECT_EQ(t.transaction_count(), 8u);
  EXPECT_EQ(head_strings(t), (std::vector<std::string>{"2310", "2730"}));

  EXPECT_EQ(node_with(t, 455).local_count, 2u);
  // 2730 -> 910 -> 455: 910 arrives after 455 and slides in between.
  const auto& n455 = node_with(t, 455);
  const auto& n910 = t.node(n455.parent);
  EXPECT_EQ(n910.value.to_string(), "910");
  EXPECT_EQ(t.node(n910.parent).value.to_string(), "2730");
  EXPECT_EQ(n910.parent, t.node(kRootNode).children[1]);

  EXPECT_EQ(t.node(node_with(t, 70).parent).value.to_string(), "770");
  EXPECT_EQ(t.node(node_with(t, 66).parent).value.to_string(), "2310");

  EXPECT_EQ(node_with(t, 2310).global_count, 1u);
  EXPECT_EQ(node_with(t, 66).global_count, 2u);
  EXPECT_EQ(node_with(t, 770).global_count, 2u);
  EXPECT_EQ(node_with(t, 70).global_count, 3u);
  EXPECT_EQ(node_with(t, 2730).global_count, 1u);
  EXPECT_EQ(node_with(t, 910).global_count, 2u);
  EXPECT_EQ(node_with(t, 455).global_count, 4u);

  EXPECT_TRUE(t.validate().empty());
}

TEST(PCTree, DuplicateInsertBumpsLocalCount) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B, C}));
  t.insert(Itemset{A, B});
  t.insert(Itemset{A, B});
  EXPECT_EQ(t.node_count(), 1u);
  EXPECT_EQ(node_with(t, 6).local_count, 2u);
  EXPECT_EQ(node_with(t, 6).global_count, 2u);
  EXPECT_TRUE(t.validate().empty());
}

TEST(PCTree, LargerValueReplacesHead) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B, C, D, E, F}));
  t.insert(Itemset{A, B, E});
  t.insert(Itemset{A, B, C, D, E});
  EXPECT_EQ(head_strings(t), (std::vector<std::string>{"2310"}));
  const auto& head = node_with(t, 2310);
  ASSERT_EQ(head.children.size(), 1u);
  EXPECT_EQ(t.node(head.children[0]).value.to_string(), "66");
  EXPECT_EQ(node_with(t, 66).global_count, 2u);
  EXPECT_TRUE(t.validate().empty());
}

TEST(PCTree, NewValueAdoptsEveryDividingHead) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B, C, D}));
  t.insert(Itemset{A, B});
  t.insert(Itemset{C, D});
  t.insert(Itemset{A, B, C, D});
  EXPECT_EQ(head_strings(t), (std::vector<std::string>{"210"}));
  EXPECT_EQ(node_with(t, 210).children.size(), 2u);
  EXPECT_EQ(node_with(t, 6).global_count, 2u);
  EXPECT_EQ(node_with(t, 35).global_count, 2u);
  EXPECT_TRUE(t.validate().empty());
}

TEST(PCTree, InsertRejectsEmptyAndUnknown) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B}));
  EXPECT_THROW(t.insert(Itemset{}), InvalidArgument);
  EXPECT_THROW(t.insert(Itemset{A, 9}), UnknownItemError);
  EXPECT_EQ(t.transaction_count(), 0u);
}

TEST(PCTree, HeadsOfSingleTransaction) {
  PCTree t(build_prime_table(std::vector<ItemId>{A, B, C}));
  t.insert(Itemset{A, C});
  EXPECT_EQ(head_strings(t), (std::vector<std::string>{"10"}));
}

TEST(PCTree, SupportOnWorkedExample) {
  auto t = example_tree();
  const auto& tab = t.prime_table();
  EXPECT_EQ(t.support(encode(Itemset{A, C, D}, tab)), 5u);
  EXPECT_EQ(t.support(TransactionValue{}), 8u);
  EXPECT_EQ(t.support(encode(Itemset{A, C, D, F}, tab)), 2u);
  EXPECT_EQ(t.support(TransactionValue::from_integer(std::uint64_t{70})), 5u);

  auto rows = example_rows();
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<ItemId> x;
    for (ItemId i = 0; i < 6; ++i)
      if (mask >> i & 1) x.push_back(i);
    EXPECT_EQ(t.support(Itemset(x)), oracle_support(rows, x)) << Itemset(x);
  }
}

TEST(PCTree, ItemFrequencies) {
  auto t = example_tree();
  const auto& f = t.item_frequencies();
  EXPECT_EQ(f.count(A), 6u);
  EXPECT_EQ(f.count(B), 3u);
  EXPECT_EQ(f.count(C), 7u);
  EXPECT_EQ(f.count(D), 7u);
  EXPECT_EQ(f.count(E), 3u);
  EXPECT_EQ(f.count(F), 4u);

  PCTree one(build_prime_table(std::vector<ItemId>{A, B, C}));
  one.insert(Itemset{A});
  EXPECT_EQ(one.item_frequencies().count(A), 1u);
  EXPECT_EQ(one.item_frequencies().count(B), 0u);
  EXPECT_EQ(one.item_frequencies().count(C), 0u);
}

TEST(PCTreeValidate, DetectsCorruptedGlobalCount) {
  auto t = example_tree();
  auto& nodes = PCTreeTestAccess::nodes(t);
  nodes[*t.find(TransactionValue::from_integer(std::uint64_t{70}))].global_count = 99;  // a leaf
  auto v = t.validate();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].invariant, TreeInvariant::GlobalCountRecurrence);
  EXPECT_EQ(v[0].node_value, "70");
}

TEST(PCTreeValidate, DetectsDuplicatedValue) {
  auto t = example_tree();
  auto& nodes = PCTreeTestAccess::nodes(t);
  // Second copy of 66 under 2310, where the chain itself still holds.
  const NodeId head = *t.find(TransactionValue::from_integer(std::uint64_t{2310}));
  PCNode dup = nodes[*t.find(TransactionValue::from_integer(std::uint64_t{66}))];
  dup.children.clear();
  dup.parent = head;
  dup.local_count = 0;
  dup.global_count = nodes[head].global_count;
  nodes.push_back(dup);
  nodes[head].children.push_back(static_cast<NodeId>(nodes.size() - 1));

  auto v = t.validate();
  auto has = [&](TreeInvariant inv) {
    return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.invariant == inv; });
  };
  EXPECT_TRUE(has(TreeInvariant::ValueUniqueness));
  EXPECT_TRUE(has(TreeInvariant::LocalCountPositive));
}

TEST(PCTreeValidate, DetectsBrokenChain) {
  auto t = example_tree();
  auto& nodes = PCTreeTestAccess::nodes(t);
  nodes[*t.find(TransactionValue::from_integer(std::uint64_t{66}))].value =
      TransactionValue::from_integer(std::uint64_t{13});
  auto v = t.validate();
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].invariant, TreeInvariant::DivisibilityChain);
}

// Invariants after every insertion, queries against the retained rows, and
// query results independent of insertion order.
TEST(PCTreeProperties, RandomizedInsertions) {
  std::mt19937_64 rng(2024);
  for (int db_seed = 0; db_seed < 40; ++db_seed) {
    auto db = random_db(rng, 10, 48);
    PCTree t(build_prime_table(db.universe), {.retain_transactions = true});
    for (const auto& tx : db.transactions) {
      t.insert(tx.items);
      auto v = t.validate();
      ASSERT_TRUE(v.empty()) << to_string(v[0].invariant) << " at " << v[0].node_value << ": "
                             << v[0].detail;
    }

    auto shuffled = db.transactions;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PCTree other(build_prime_table(db.universe));
    for (const auto& tx : shuffled) other.insert(tx.items);

    const auto rows = rows_of(db);
    const auto n = db.universe.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<ItemId> x;
      for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1) x.push_back(db.universe[b]);
      const auto s = t.support(Itemset(x));
      ASSERT_EQ(s, oracle_support(rows, x));
      ASSERT_EQ(other.support(Itemset(x)), s);
    }
  }
}

TEST(PCTreeProperties, SupportIsMonotoneUnderDivisibility) {
  std::mt19937_64 rng(99);
  auto db = random_db(rng, 12, 64);
  auto t = build_tree(db);
  std::bernoulli_distribution coin(0.5);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<ItemId> p, q;
    for (ItemId i : db.universe) {
      if (coin(rng)) {
        p.push_back(i);
        if (coin(rng)) q.push_back(i);
      }
    }
    const auto vp = encode(Itemset(p), t.prime_table());
    const auto vq = encode(Itemset(q), t.prime_table());
    ASSERT_TRUE(divides(vq, vp));
    ASSERT_LE(t.support(vp), t.support(vq));
  }
}

}  // namespace
}  // namespace pcminer
