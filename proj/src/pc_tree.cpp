#include "pcminer/pc_tree.hpp"

#include <algorithm>

#include "pcminer/error.hpp"

namespace pcminer {

ItemFrequencyTable::ItemFrequencyTable(std::span<const ItemId> universe) {
  for (ItemId id : universe) counts_.emplace(id, 0);
}

std::uint64_t ItemFrequencyTable::count(ItemId id) const noexcept {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

const char* to_string(TreeInvariant inv) noexcept {
  switch (inv) {
    case TreeInvariant::LocalCountPositive: return "local_count >= 1";
    case TreeInvariant::GlobalCountRecurrence: return "global_count recurrence";
    case TreeInvariant::DivisibilityChain: return "divisibility chain";
    case TreeInvariant::ValueUniqueness: return "value uniqueness";
    case TreeInvariant::ParentLink: return "parent link";
    case TreeInvariant::CountConservation: return "local_count sum = transaction_count";
    case TreeInvariant::FrequencyBound: return "item frequency";
    case TreeInvariant::FactorCacheAgreement: return "factor cache agreement";
  }
  return "unknown";
}

PCTree::PCTree(PrimeTable table, TreeOptions options)
    : table_(std::move(table)), options_(options), frequencies_(table_.ids()) {
  nodes_.emplace_back();  // root, value "null"
}

void PCTree::insert(const Itemset& x) {
  if (x.empty()) throw InvalidArgument("cannot insert an empty transaction");
  TransactionValue v = encode(x, table_);

  for (ItemId id : x) frequencies_.increment(id);
  ++transaction_count_;
  if (options_.retain_transactions) retained_.push_back(x);

  if (auto it = by_value_.find(v.value()); it != by_value_.end()) {
    auto& n = nodes_[it->second];
    ++n.local_count;
    add_to_subtree_global(it->second, 1);
    return;
  }

  const auto& heads = nodes_[kRootNode].children;
  auto accepting = std::find_if(heads.begin(), heads.end(),
                                [&](NodeId h) { return subtree_accepts(h, v); });

  const bool placed = accepting != heads.end();
  const NodeId id = static_cast<NodeId>(nodes_.size());
  const NodeId attach = placed ? deepest_multiple(*accepting, v) : kRootNode;

  PCNode fresh;
  fresh.value = v;
  fresh.local_count = 1;
  fresh.parent = attach;

  // Children of the attachment point that divide v move under the new node.
  if (placed) {
    auto& siblings = nodes_[attach].children;
    std::vector<NodeId> kept;
    kept.reserve(siblings.size());
    for (NodeId c : siblings) {
      if (divides(nodes_[c].value, v))
        fresh.children.push_back(c);
      else
        kept.push_back(c);
    }
    siblings = std::move(kept);
  }

  nodes_.push_back(std::move(fresh));
  for (NodeId c : nodes_[id].children) nodes_[c].parent = id;
  nodes_[attach].children.push_back(id);
  by_value_.emplace(nodes_[id].value.value(), id);
  refresh_global_counts(id);
}

void PCTree::add_to_subtree_global(NodeId top, std::uint64_t delta) {
  std::vector<NodeId> stack{top};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    nodes_[n].global_count += delta;
    for (NodeId c : nodes_[n].children) stack.push_back(c);
  }
}

void PCTree::refresh_global_counts(NodeId top) {
  std::vector<NodeId> stack{top};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    auto& node = nodes_[n];
    const std::uint64_t above = node.parent == kRootNode ? 0 : nodes_[node.parent].global_count;
    node.global_count = node.local_count + above;
    for (NodeId c : node.children) stack.push_back(c);
  }
}

bool PCTree::subtree_accepts(NodeId head, const TransactionValue& v) const {
  // Every node divides the head, so v dividing any node means v divides the head.
  if (divides(v, nodes_[head].value)) return true;
  std::vector<NodeId> stack{head};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    if (divides(nodes_[n].value, v)) return true;
    for (NodeId c : nodes_[n].children) stack.push_back(c);
  }
  return false;
}

NodeId PCTree::deepest_multiple(NodeId head, const TransactionValue& v) const {
  // Multiples of v are closed towards the root, so only descend through them.
  NodeId best = kRootNode;
  std::size_t best_depth = 0;
  struct Frame {
    NodeId node;
    std::size_t depth;
  };
  std::vector<Frame> stack;
  if (divides(v, nodes_[head].value)) stack.push_back({head, 1});
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    if (depth > best_depth || (depth == best_depth && n < best)) {
      best = n;
      best_depth = depth;
    }
    for (NodeId c : nodes_[n].children)
      if (divides(v, nodes_[c].value)) stack.push_back({c, depth + 1});
  }
  return best;
}

std::vector<TransactionValue> PCTree::heads() const {
  std::vector<TransactionValue> out;
  for (NodeId h : nodes_[kRootNode].children) out.push_back(nodes_[h].value);
  return out;
}

std::optional<NodeId> PCTree::find(const TransactionValue& v) const {
  auto it = by_value_.find(v.value());
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t PCTree::support(const TransactionValue& v) const {
  std::uint64_t total = 0;
  std::vector<NodeId> stack(nodes_[kRootNode].children.rbegin(),
                            nodes_[kRootNode].children.rend());
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    const auto& node = nodes_[n];
    if (!divides(v, node.value)) continue;  // nothing below can be a multiple either
    total += node.local_count;
    for (NodeId c : node.children) stack.push_back(c);
  }
  return total;
}

std::vector<TreeViolation> PCTree::validate() const {
  std::vector<TreeViolation> out;
  auto report = [&](NodeId n, TreeInvariant inv, std::string detail) {
    out.push_back({n == kRootNode ? std::string("root") : nodes_[n].value.to_string(), inv,
                   std::move(detail)});
  };

  std::map<mpz_class, std::size_t> seen;
  std::uint64_t local_sum = 0;
  std::vector<bool> reached(nodes_.size(), false);
  std::vector<NodeId> stack{kRootNode};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    if (reached[n]) {
      report(n, TreeInvariant::ParentLink, "node reachable through more than one parent");
      continue;
    }
    reached[n] = true;
    const auto& node = nodes_[n];
    for (NodeId c : node.children) {
      if (c >= nodes_.size() || c == kRootNode) {
        report(n, TreeInvariant::ParentLink, "child id out of range");
        continue;
      }
      if (nodes_[c].parent != n) report(c, TreeInvariant::ParentLink, "parent pointer mismatch");
      stack.push_back(c);
    }
    if (n == kRootNode) continue;

    local_sum += node.local_count;
    if (node.local_count < 1) report(n, TreeInvariant::LocalCountPositive, "local_count is 0");

    const std::uint64_t above =
        node.parent == kRootNode ? 0 : nodes_[node.parent].global_count;
    if (node.global_count != node.local_count + above)
      report(n, TreeInvariant::GlobalCountRecurrence,
             "global_count " + std::to_string(node.global_count) + " != " +
                 std::to_string(node.local_count) + " + " + std::to_string(above));

    if (node.parent != kRootNode) {
      const auto& parent = nodes_[node.parent].value;
      if (!divides_by_value(node.value, parent) || node.value == parent)
        report(n, TreeInvariant::DivisibilityChain,
               "does not strictly divide parent " + parent.to_string());
    }

    if (++seen[node.value.value()] == 2)
      report(n, TreeInvariant::ValueUniqueness, "value stored in more than one node");

    if (node.value.has_factor_cache()) {
      try {
        if (decode(node.value, table_) != decode_by_division(node.value.value(), table_))
          report(n, TreeInvariant::FactorCacheAgreement, "cached factors disagree with value");
      } catch (const Error& e) {
        report(n, TreeInvariant::FactorCacheAgreement, e.what());
      }
    }
  }

  for (NodeId n = 1; n < nodes_.size(); ++n)
    if (!reached[n]) report(n, TreeInvariant::ParentLink, "node unreachable from root");

  if (local_sum != transaction_count_)
    report(kRootNode, TreeInvariant::CountConservation,
           std::to_string(local_sum) + " != " + std::to_string(transaction_count_));

  for (const auto& [id, c] : frequencies_.counts()) {
    if (c > transaction_count_)
      report(kRootNode, TreeInvariant::FrequencyBound,
             "item " + std::to_string(id) + " count exceeds transaction_count");
  }
  if (options_.retain_transactions) {
    std::map<ItemId, std::uint64_t> truth;
    for (const auto& t : retained_)
      for (ItemId i : t) ++truth[i];
    for (const auto& [id, c] : frequencies_.counts()) {
      auto it = truth.find(id);
      const std::uint64_t expected = it == truth.end() ? 0 : it->second;
      if (c != expected)
        report(kRootNode, TreeInvariant::FrequencyBound,
               "item " + std::to_string(id) + " count " + std::to_string(c) +
                   " != retained " + std::to_string(expected));
    }
  }
  return out;
}

}  // namespace pcminer
