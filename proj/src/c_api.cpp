#include "pcminer/pcminer.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "pcminer/baselines.hpp"
#include "pcminer/dataset_io.hpp"
#include "pcminer/error.hpp"
#include "pcminer/pc_miner.hpp"

struct pcm_db {
  pcminer::TransactionDB db;
  pcminer::PrimeTable table;
};

struct pcm_tree {
  pcminer::PCTree tree;
};

struct pcm_result {
  std::vector<std::pair<pcminer::Itemset, std::uint64_t>> frequent;
  std::vector<pcminer::Itemset> maximal;
  std::uint64_t candidates = 0;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string last_error;

pcm_status fail(pcm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
pcm_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const pcminer::ParseError& e) {
    return fail(PCM_ERR_PARSE, e.what());
  } catch (const pcminer::IoError& e) {
    return fail(PCM_ERR_IO, e.what());
  } catch (const pcminer::UnknownItemError& e) {
    return fail(PCM_ERR_UNKNOWN_ITEM, e.what());
  } catch (const pcminer::DecodeError& e) {
    return fail(PCM_ERR_DECODE, e.what());
  } catch (const pcminer::GuardError& e) {
    return fail(PCM_ERR_GUARD, e.what());
  } catch (const pcminer::InvalidArgument& e) {
    return fail(PCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCM_ERR_INTERNAL, e.what());
  }
}

pcm_status null_arg(const char* name) {
  return fail(PCM_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

pcminer::Itemset itemset_from(const uint32_t* items, size_t n) {
  return pcminer::Itemset(std::vector<pcminer::ItemId>(items, items + n));
}

pcm_db* wrap_db(pcminer::TransactionDB db) {
  auto table = pcminer::build_prime_table(db.universe);
  return new pcm_db{std::move(db), std::move(table)};
}

std::unique_ptr<pcm_result> to_result(const pcminer::FrequentMap& frequent,
                                      std::vector<pcminer::Itemset> maximal,
                                      std::uint64_t candidates,
                                      std::vector<std::string> warnings) {
  auto r = std::make_unique<pcm_result>();
  r->frequent.assign(frequent.begin(), frequent.end());
  r->maximal = std::move(maximal);
  r->candidates = candidates;
  r->warnings = std::move(warnings);
  return r;
}

std::vector<pcminer::StatsRow> convert_rows(const pcm_stats_row* rows, size_t n) {
  std::vector<pcminer::StatsRow> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& r = rows[i];
    out.push_back({r.dataset ? r.dataset : "", r.algorithm ? r.algorithm : "", r.min_sup,
                   r.num_frequent, r.num_candidates, r.runtime_ms});
  }
  return out;
}

// Copies `s` into a caller buffer, reporting the size needed.
pcm_status copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap == 0) return PCM_OK;
  const size_t k = std::min(cap - 1, s.size());
  std::memcpy(buf, s.data(), k);
  buf[k] = '\0';
  if (k < s.size()) return fail(PCM_ERR_INVALID_ARGUMENT, "buffer too small");
  return PCM_OK;
}

std::string describe(const pcminer::Itemset& x, const std::uint64_t* a, const std::uint64_t* b) {
  std::ostringstream os;
  os << x << ": ";
  if (a) os << *a; else os << "absent";
  os << " vs ";
  if (b) os << *b; else os << "absent";
  return os.str();
}

}  // namespace

extern "C" {

const char* pcm_version(void) { return "1.0.0"; }

const char* pcm_last_error(void) { return last_error.c_str(); }

const char* pcm_status_name(pcm_status status) {
  switch (status) {
    case PCM_OK: return "ok";
    case PCM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PCM_ERR_IO: return "i/o error";
    case PCM_ERR_PARSE: return "parse error";
    case PCM_ERR_UNKNOWN_ITEM: return "unknown item";
    case PCM_ERR_DECODE: return "decode error";
    case PCM_ERR_GUARD: return "enumeration guard";
    case PCM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pcm_algorithm_name(pcm_algorithm algo) {
  switch (algo) {
    case PCM_ALGO_PCMINER: return "pcminer";
    case PCM_ALGO_APRIORI: return "apriori";
    case PCM_ALGO_BRUTE: return "brute";
  }
  return "unknown";
}

pcm_status pcm_algorithm_parse(const char* name, pcm_algorithm* out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  for (auto a : {PCM_ALGO_PCMINER, PCM_ALGO_APRIORI, PCM_ALGO_BRUTE}) {
    if (std::strcmp(name, pcm_algorithm_name(a)) == 0) {
      *out = a;
      return PCM_OK;
    }
  }
  return fail(PCM_ERR_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
}

pcm_status pcm_db_load(const char* path, pcm_db** out, size_t* skipped_lines) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto loaded = pcminer::load_transactions(path);
    if (skipped_lines) *skipped_lines = loaded.skipped_lines;
    *out = wrap_db(std::move(loaded.db));
    return PCM_OK;
  });
}

pcm_status pcm_db_synthetic(uint64_t num_transactions, uint32_t num_items, double density,
                            uint64_t seed, pcm_db** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = wrap_db(pcminer::generate_synthetic({num_transactions, num_items, density, seed}));
    return PCM_OK;
  });
}

pcm_status pcm_db_from_rows(const uint32_t* items, const size_t* row_lengths, size_t rows,
                            pcm_db** out) {
  if (!out) return null_arg("out");
  if (rows > 0 && (!items || !row_lengths)) return null_arg("items/row_lengths");
  return guarded([&] {
    pcminer::TransactionDB db;
    size_t offset = 0;
    for (size_t r = 0; r < rows; ++r) {
      db.add(itemset_from(items + offset, row_lengths[r]));
      offset += row_lengths[r];
    }
    *out = wrap_db(std::move(db));
    return PCM_OK;
  });
}

pcm_status pcm_db_write(const pcm_db* db, const char* path) {
  if (!db) return null_arg("db");
  if (!path) return null_arg("path");
  return guarded([&] {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw pcminer::IoError(std::string("cannot write ") + path);
    pcminer::write_transactions(db->db, f);
    f.flush();
    if (!f) throw pcminer::IoError(std::string("write failed for ") + path);
    return PCM_OK;
  });
}

void pcm_db_free(pcm_db* db) { delete db; }

size_t pcm_db_transaction_count(const pcm_db* db) { return db ? db->db.size() : 0; }

size_t pcm_db_item_count(const pcm_db* db) { return db ? db->db.universe.size() : 0; }

pcm_status pcm_db_encode(const pcm_db* db, const uint32_t* items, size_t n, char* buf, size_t cap,
                         size_t* needed) {
  if (!db) return null_arg("db");
  if (n > 0 && !items) return null_arg("items");
  return guarded([&] {
    return copy_out(pcminer::encode(itemset_from(items, n), db->table).to_string(), buf, cap,
                    needed);
  });
}

pcm_status pcm_tree_build(const pcm_db* db, pcm_tree** out) {
  if (!db) return null_arg("db");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new pcm_tree{pcminer::build_tree(db->db)};
    return PCM_OK;
  });
}

void pcm_tree_free(pcm_tree* tree) { delete tree; }

size_t pcm_tree_node_count(const pcm_tree* tree) { return tree ? tree->tree.node_count() : 0; }

size_t pcm_tree_head_count(const pcm_tree* tree) {
  return tree ? tree->tree.node(pcminer::kRootNode).children.size() : 0;
}

pcm_status pcm_tree_support(const pcm_tree* tree, const uint32_t* items, size_t n, uint64_t* out) {
  if (!tree) return null_arg("tree");
  if (!out) return null_arg("out");
  if (n > 0 && !items) return null_arg("items");
  return guarded([&] {
    *out = tree->tree.support(itemset_from(items, n));
    return PCM_OK;
  });
}

pcm_status pcm_tree_validate(const pcm_tree* tree, size_t* violations) {
  if (!tree) return null_arg("tree");
  if (!violations) return null_arg("violations");
  return guarded([&] {
    *violations = tree->tree.validate().size();
    return PCM_OK;
  });
}

pcm_status pcm_mine_tree(const pcm_tree* tree, uint64_t min_sup, unsigned threads,
                         pcm_result** out) {
  if (!tree) return null_arg("tree");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto r = pcminer::mine(tree->tree, {min_sup}, {threads});
    *out = to_result(r.frequent, std::move(r.maximal), r.candidates_examined,
                     std::move(r.warnings))
               .release();
    return PCM_OK;
  });
}

pcm_status pcm_mine_db(const pcm_db* db, pcm_algorithm algo, uint64_t min_sup, pcm_result** out) {
  if (!db) return null_arg("db");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (algo == PCM_ALGO_PCMINER) {
      auto tree = pcminer::build_tree(db->db);
      auto r = pcminer::mine(tree, {min_sup});
      *out = to_result(r.frequent, std::move(r.maximal), r.candidates_examined,
                       std::move(r.warnings))
                 .release();
      return PCM_OK;
    }
    pcminer::BaselineResult b;
    if (algo == PCM_ALGO_APRIORI)
      b = pcminer::apriori_mine(db->db, {min_sup});
    else if (algo == PCM_ALGO_BRUTE)
      b = pcminer::brute_force_mine(db->db, {min_sup});
    else
      throw pcminer::InvalidArgument("unknown algorithm");
    std::vector<pcminer::Itemset> keys;
    keys.reserve(b.frequent.size());
    for (const auto& [x, s] : b.frequent) keys.push_back(x);
    std::vector<std::string> warnings;
    if (min_sup == 0) warnings.emplace_back("min_sup 0 admits unsupported itemsets; mining with min_sup 1");
    *out = to_result(b.frequent, pcminer::maximal_frequent(keys), b.candidates_generated,
                     std::move(warnings))
               .release();
    return PCM_OK;
  });
}

void pcm_result_free(pcm_result* result) { delete result; }

size_t pcm_result_frequent_count(const pcm_result* result) {
  return result ? result->frequent.size() : 0;
}

pcm_status pcm_result_frequent_at(const pcm_result* result, size_t index, const uint32_t** items,
                                  size_t* len, uint64_t* support) {
  if (!result) return null_arg("result");
  if (index >= result->frequent.size()) return fail(PCM_ERR_INVALID_ARGUMENT, "index out of range");
  const auto& [x, s] = result->frequent[index];
  if (items) *items = x.items().data();
  if (len) *len = x.size();
  if (support) *support = s;
  return PCM_OK;
}

size_t pcm_result_maximal_count(const pcm_result* result) {
  return result ? result->maximal.size() : 0;
}

pcm_status pcm_result_maximal_at(const pcm_result* result, size_t index, const uint32_t** items,
                                 size_t* len) {
  if (!result) return null_arg("result");
  if (index >= result->maximal.size()) return fail(PCM_ERR_INVALID_ARGUMENT, "index out of range");
  const auto& x = result->maximal[index];
  if (items) *items = x.items().data();
  if (len) *len = x.size();
  return PCM_OK;
}

uint64_t pcm_result_candidates(const pcm_result* result) { return result ? result->candidates : 0; }

size_t pcm_result_warning_count(const pcm_result* result) {
  return result ? result->warnings.size() : 0;
}

const char* pcm_result_warning_at(const pcm_result* result, size_t index) {
  if (!result || index >= result->warnings.size()) return nullptr;
  return result->warnings[index].c_str();
}

int pcm_result_diff(const pcm_result* a, const pcm_result* b, char* buf, size_t cap) {
  if (!a || !b) {
    if (buf && cap > 0) std::snprintf(buf, cap, "%s", "null result");
    return 1;
  }
  // Both lists are sorted; merge until the first mismatch.
  std::string what;
  size_t i = 0, j = 0;
  while (what.empty() && (i < a->frequent.size() || j < b->frequent.size())) {
    if (j == b->frequent.size() ||
        (i < a->frequent.size() && a->frequent[i].first < b->frequent[j].first)) {
      what = describe(a->frequent[i].first, &a->frequent[i].second, nullptr);
    } else if (i == a->frequent.size() || b->frequent[j].first < a->frequent[i].first) {
      what = describe(b->frequent[j].first, nullptr, &b->frequent[j].second);
    } else {
      if (a->frequent[i].second != b->frequent[j].second)
        what = describe(a->frequent[i].first, &a->frequent[i].second, &b->frequent[j].second);
      ++i;
      ++j;
    }
  }
  if (what.empty()) return 0;
  if (buf && cap > 0) std::snprintf(buf, cap, "%s", what.c_str());
  return 1;
}

pcm_status pcm_stats_write(const char* path, const pcm_stats_row* rows, size_t n) {
  if (!path) return null_arg("path");
  if (n > 0 && !rows) return null_arg("rows");
  return guarded([&] {
    pcminer::write_stats(convert_rows(rows, n), std::filesystem::path(path));
    return PCM_OK;
  });
}

pcm_status pcm_stats_format(const pcm_stats_row* rows, size_t n, char* buf, size_t cap,
                            size_t* needed) {
  if (n > 0 && !rows) return null_arg("rows");
  return guarded([&] {
    std::ostringstream os;
    pcminer::write_stats(convert_rows(rows, n), os);
    return copy_out(os.str(), buf, cap, needed);
  });
}

}  // extern "C"
