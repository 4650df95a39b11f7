#include "pcminer/prime_codec.hpp"

#include <algorithm>
#include <cmath>

#include "pcminer/error.hpp"

namespace pcminer {

std::vector<Prime> first_n_primes(std::size_t n) {
  std::vector<Prime> out;
  if (n == 0) return out;
  out.reserve(n);

  // Rosser's bound: p_n < n (ln n + ln ln n) for n >= 6.
  std::size_t limit = 15;
  if (n >= 6) {
    const double dn = static_cast<double>(n);
    limit = static_cast<std::size_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 1;
  }

  std::vector<bool> composite(limit + 1, false);
  for (std::size_t i = 2; i <= limit && out.size() < n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::optional<std::size_t> PrimeTable::rank_of(ItemId id) const noexcept {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::optional<std::size_t> PrimeTable::rank_of_prime(Prime p) const noexcept {
  auto it = rank_by_prime_.find(p);
  if (it == rank_by_prime_.end()) return std::nullopt;
  return it->second;
}

Prime PrimeTable::prime_of(ItemId id) const {
  auto r = rank_of(id);
  if (!r) throw UnknownItemError("item " + std::to_string(id) + " is not in the prime table");
  return primes_[*r];
}

ItemId PrimeTable::item_of(Prime p) const {
  auto r = rank_of_prime(p);
  if (!r) throw DecodeError("prime " + std::to_string(p) + " is not in the prime table");
  return ids_[*r];
}

PrimeTable build_prime_table(std::span<const ItemId> universe) {
  PrimeTable t;
  t.ids_.assign(universe.begin(), universe.end());
  std::sort(t.ids_.begin(), t.ids_.end());
  t.ids_.erase(std::unique(t.ids_.begin(), t.ids_.end()), t.ids_.end());
  t.primes_ = first_n_primes(t.ids_.size());
  t.rank_by_prime_.reserve(t.primes_.size());
  for (std::size_t r = 0; r < t.primes_.size(); ++r) t.rank_by_prime_.emplace(t.primes_[r], r);
  return t;
}

TransactionValue TransactionValue::from_integer(const mpz_class& v) {
  if (v < 1) throw InvalidArgument("transaction value must be >= 1");
  return TransactionValue(v, std::nullopt);
}

TransactionValue TransactionValue::from_integer(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return from_integer(z);
}

TransactionValue TransactionValue::from_string(const std::string& decimal) {
  mpz_class z;
  if (decimal.empty() || z.set_str(decimal, 10) != 0)
    throw InvalidArgument("not a base-10 integer: '" + decimal + "'");
  return from_integer(z);
}

std::span<const std::uint32_t> TransactionValue::factor_ranks() const noexcept {
  if (!ranks_) return {};
  return *ranks_;
}

TransactionValue encode(const Itemset& x, const PrimeTable& t) {
  std::vector<std::uint32_t> ranks;
  ranks.reserve(x.size());
  mpz_class v = 1;
  for (ItemId id : x) {
    auto r = t.rank_of(id);
    if (!r) throw UnknownItemError("item " + std::to_string(id) + " is not in the prime table");
    ranks.push_back(static_cast<std::uint32_t>(*r));
    v *= static_cast<unsigned long>(t.primes()[*r]);
  }
  // Itemset is sorted and ranks are monotone in id, so ranks are sorted.
  return TransactionValue(std::move(v), std::move(ranks));
}

Itemset decode_by_division(const mpz_class& v, const PrimeTable& t) {
  if (v < 1) throw DecodeError("transaction value must be >= 1");
  mpz_class residual = v;
  std::vector<ItemId> items;
  const auto primes = t.primes();
  for (std::size_t r = 0; r < primes.size() && residual != 1; ++r) {
    const auto p = static_cast<unsigned long>(primes[r]);
    if (mpz_divisible_ui_p(residual.get_mpz_t(), p)) {
      mpz_divexact_ui(residual.get_mpz_t(), residual.get_mpz_t(), p);
      if (mpz_divisible_ui_p(residual.get_mpz_t(), p))
        throw DecodeError("prime " + std::to_string(primes[r]) + " repeats in " + v.get_str());
      items.push_back(t.ids()[r]);
    }
  }
  if (residual != 1)
    throw DecodeError("residual factor " + residual.get_str() + " of " + v.get_str() +
                      " is not in the prime table");
  return Itemset(std::move(items));
}

Itemset decode(const TransactionValue& v, const PrimeTable& t) {
  if (!v.has_factor_cache()) return decode_by_division(v.value(), t);
  std::vector<ItemId> items;
  items.reserve(v.factor_ranks().size());
  for (auto r : v.factor_ranks()) {
    if (r >= t.size()) throw DecodeError("factor rank out of table range");
    items.push_back(t.ids()[r]);
  }
  return Itemset(std::move(items));
}

bool divides_by_value(const TransactionValue& q, const TransactionValue& p) {
  return mpz_divisible_p(p.value().get_mpz_t(), q.value().get_mpz_t()) != 0;
}

bool divides(const TransactionValue& q, const TransactionValue& p) {
  if (q.has_factor_cache() && p.has_factor_cache()) {
    auto qs = q.factor_ranks();
    auto ps = p.factor_ranks();
    if (qs.size() > ps.size()) return false;
    return std::includes(ps.begin(), ps.end(), qs.begin(), qs.end());
  }
  return divides_by_value(q, p);
}

}  // namespace pcminer
