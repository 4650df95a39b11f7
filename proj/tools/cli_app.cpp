#include "cli_app.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace pcminer::cli {

namespace {

struct DbDeleter {
  void operator()(pcm_db* p) const { pcm_db_free(p); }
};
struct TreeDeleter {
  void operator()(pcm_tree* p) const { pcm_tree_free(p); }
};
struct ResultDeleter {
  void operator()(pcm_result* p) const { pcm_result_free(p); }
};
using DbPtr = std::unique_ptr<pcm_db, DbDeleter>;
using TreePtr = std::unique_ptr<pcm_tree, TreeDeleter>;
using ResultPtr = std::unique_ptr<pcm_result, ResultDeleter>;

/// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

[[noreturn]] void raise(pcm_status st, std::string_view context) {
  const int code = st == PCM_ERR_GUARD ? kExitDifferent : kExitUsage;
  throw Failure{code, std::string(context) + ": " + pcm_status_name(st) + ": " + pcm_last_error()};
}

void check(pcm_status st, std::string_view context) {
  if (st != PCM_OK) raise(st, context);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

template <class T>
bool parse_number(const std::string& s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

struct CommonOptions {
  std::string input;
  std::string synthetic;
  std::string min_sup;
  std::string stats_out;
  std::string algo;
  std::string sigmas;
  unsigned threads = 1;
  bool quiet = false;
};

struct Dataset {
  DbPtr db;
  std::string label;
};

Dataset open_dataset(const CommonOptions& o, std::ostream& err) {
  if (o.input.empty() == o.synthetic.empty())
    throw Failure{kExitUsage, "exactly one of --input or --synthetic is required"};

  pcm_db* raw = nullptr;
  if (!o.input.empty()) {
    size_t skipped = 0;
    check(pcm_db_load(o.input.c_str(), &raw, &skipped), "loading " + o.input);
    if (skipped > 0 && !o.quiet)
      err << "warning: skipped " << skipped << " blank line(s) in " << o.input << '\n';
    return {DbPtr(raw), std::filesystem::path(o.input).filename().string()};
  }

  auto f = split(o.synthetic, ',');
  std::uint64_t n = 0, seed = 0;
  std::uint32_t items = 0;
  double density = 0;
  if (f.size() != 4 || !parse_number(f[0], n) || !parse_number(f[1], items) ||
      !parse_number(f[2], density) || !parse_number(f[3], seed))
    throw Failure{kExitUsage, "--synthetic expects N,ITEMS,DENSITY,SEED"};
  check(pcm_db_synthetic(n, items, density, seed, &raw), "generating synthetic database");
  return {DbPtr(raw), "synthetic-" + f[0] + "-" + f[1] + "-" + f[2] + "-" + f[3]};
}

std::uint64_t min_sup_for(const std::string& spec, const pcm_db* db) {
  auto s = resolve_min_sup(spec, pcm_db_transaction_count(db));
  if (!s) throw Failure{kExitUsage, "invalid --min-sup '" + spec + "'"};
  return *s;
}

pcm_algorithm algorithm_for(const std::string& name) {
  pcm_algorithm a{};
  if (pcm_algorithm_parse(name.c_str(), &a) != PCM_OK)
    throw Failure{kExitUsage, "unknown algorithm '" + name + "'"};
  return a;
}

void print_itemset(std::ostream& out, const uint32_t* items, size_t len) {
  for (size_t i = 0; i < len; ++i) out << (i ? " " : "") << items[i];
}

void print_warnings(const pcm_result* r, std::ostream& err) {
  for (size_t i = 0; i < pcm_result_warning_count(r); ++i)
    err << "warning: " << pcm_result_warning_at(r, i) << '\n';
}

void print_report(const pcm_result* r, bool quiet, std::ostream& out) {
  const uint32_t* items = nullptr;
  size_t len = 0;
  uint64_t support = 0;
  out << "frequent_itemsets: " << pcm_result_frequent_count(r) << '\n';
  if (!quiet) {
    for (size_t i = 0; i < pcm_result_frequent_count(r); ++i) {
      pcm_result_frequent_at(r, i, &items, &len, &support);
      out << "  ";
      print_itemset(out, items, len);
      out << " (" << support << ")\n";
    }
  }
  out << "maximal_itemsets: " << pcm_result_maximal_count(r) << '\n';
  if (!quiet) {
    for (size_t i = 0; i < pcm_result_maximal_count(r); ++i) {
      pcm_result_maximal_at(r, i, &items, &len);
      out << "  ";
      print_itemset(out, items, len);
      out << '\n';
    }
  }
  out << "candidates: " << pcm_result_candidates(r) << '\n';
}

struct Timed {
  ResultPtr result;
  double mine_ms = 0;
};

Timed run_algorithm(const pcm_db* db, const pcm_tree* tree, pcm_algorithm algo,
                    std::uint64_t sigma, unsigned threads) {
  Timed t;
  pcm_result* raw = nullptr;
  auto start = Clock::now();
  if (algo == PCM_ALGO_PCMINER) {
    check(pcm_mine_tree(tree, sigma, threads, &raw), "mining");
  } else {
    check(pcm_mine_db(db, algo, sigma, &raw), "mining");
  }
  t.mine_ms = elapsed_ms(start);
  t.result.reset(raw);
  return t;
}

TreePtr build_tree(const pcm_db* db, double& build_ms) {
  pcm_tree* raw = nullptr;
  auto start = Clock::now();
  check(pcm_tree_build(db, &raw), "building tree");
  build_ms = elapsed_ms(start);
  return TreePtr(raw);
}

int cmd_mine(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto ds = open_dataset(o, err);
  const auto algo = algorithm_for(o.algo.empty() ? "pcminer" : o.algo);
  const auto sigma = min_sup_for(o.min_sup, ds.db.get());

  double build_ms = 0;
  TreePtr tree;
  if (algo == PCM_ALGO_PCMINER) tree = build_tree(ds.db.get(), build_ms);
  auto t = run_algorithm(ds.db.get(), tree.get(), algo, sigma, o.threads);
  print_warnings(t.result.get(), err);

  out << "dataset: " << ds.label << '\n'
      << "transactions: " << pcm_db_transaction_count(ds.db.get()) << '\n'
      << "items: " << pcm_db_item_count(ds.db.get()) << '\n'
      << "algorithm: " << pcm_algorithm_name(algo) << '\n'
      << "min_sup: " << sigma << '\n';
  if (tree) out << "tree_nodes: " << pcm_tree_node_count(tree.get()) << '\n';
  print_report(t.result.get(), o.quiet, out);
  if (tree) out << "build_ms: " << build_ms << '\n';
  out << "mine_ms: " << t.mine_ms << '\n';

  if (!o.stats_out.empty()) {
    const std::string name = pcm_algorithm_name(algo);
    pcm_stats_row row{ds.label.c_str(), name.c_str(), sigma,
                      pcm_result_frequent_count(t.result.get()),
                      pcm_result_candidates(t.result.get()), t.mine_ms};
    check(pcm_stats_write(o.stats_out.c_str(), &row, 1), "writing stats");
  }
  return kExitOk;
}

int cmd_compare(const CommonOptions& o, const MinerSet& miners, std::ostream& out,
                std::ostream& err) {
  auto ds = open_dataset(o, err);
  const auto sigma = min_sup_for(o.min_sup, ds.db.get());

  struct Entry {
    const char* name;
    const MinerFn* fn;
    ResultPtr result;
  };
  std::vector<Entry> entries;
  entries.push_back({"pcminer", &miners.pcminer, nullptr});
  entries.push_back({"apriori", &miners.apriori, nullptr});
  entries.push_back({"brute", &miners.brute, nullptr});

  std::vector<Entry*> ran;
  for (auto& e : entries) {
    pcm_result* raw = nullptr;
    const pcm_status st = (*e.fn)(ds.db.get(), sigma, &raw);
    if (st == PCM_ERR_GUARD) {
      out << e.name << ": skipped (" << pcm_last_error() << ")\n";
      continue;
    }
    check(st, e.name);
    e.result.reset(raw);
    ran.push_back(&e);
    if (!o.quiet)
      out << e.name << ": " << pcm_result_frequent_count(raw) << " frequent, "
          << pcm_result_candidates(raw) << " candidates\n";
  }
  if (ran.size() < 2) throw Failure{kExitDifferent, "fewer than two miners could run"};

  char buf[512];
  for (size_t i = 1; i < ran.size(); ++i) {
    if (pcm_result_diff(ran[0]->result.get(), ran[i]->result.get(), buf, sizeof(buf)) != 0) {
      out << "DIFFERENT " << ran[0]->name << " vs " << ran[i]->name << ": " << buf << '\n';
      return kExitDifferent;
    }
  }
  out << "EQUAL\n";
  return kExitOk;
}

int cmd_bench(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto ds = open_dataset(o, err);
  std::vector<std::uint64_t> sigmas;
  for (const auto& s : split(o.sigmas, ',')) sigmas.push_back(min_sup_for(s, ds.db.get()));
  if (sigmas.empty()) throw Failure{kExitUsage, "--sigmas must list at least one threshold"};

  std::vector<pcm_algorithm> algos;
  for (const auto& a : split(o.algo.empty() ? "pcminer,apriori" : o.algo, ','))
    algos.push_back(algorithm_for(a));

  double build_ms = 0;
  TreePtr tree;
  for (auto a : algos)
    if (a == PCM_ALGO_PCMINER && !tree) tree = build_tree(ds.db.get(), build_ms);

  struct Row {
    std::string algo;
    std::uint64_t sigma, frequent, candidates;
    double ms;
  };
  std::vector<Row> rows;
  for (auto sigma : sigmas) {
    for (auto a : algos) {
      auto t = run_algorithm(ds.db.get(), tree.get(), a, sigma, o.threads);
      rows.push_back({pcm_algorithm_name(a), sigma, pcm_result_frequent_count(t.result.get()),
                      pcm_result_candidates(t.result.get()), t.mine_ms});
    }
  }

  std::vector<pcm_stats_row> c_rows;
  for (const auto& r : rows)
    c_rows.push_back({ds.label.c_str(), r.algo.c_str(), r.sigma, r.frequent, r.candidates, r.ms});

  if (o.stats_out.empty()) {
    size_t needed = 0;
    check(pcm_stats_format(c_rows.data(), c_rows.size(), nullptr, 0, &needed), "formatting stats");
    std::string csv(needed, '\0');
    check(pcm_stats_format(c_rows.data(), c_rows.size(), csv.data(), csv.size(), &needed),
          "formatting stats");
    csv.pop_back();
    out << csv;
  } else {
    check(pcm_stats_write(o.stats_out.c_str(), c_rows.data(), c_rows.size()), "writing stats");
    if (!o.quiet) {
      if (tree) out << "build_ms: " << build_ms << '\n';
      out << "wrote " << c_rows.size() << " rows to " << o.stats_out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

MinerSet default_miners(unsigned threads) {
  MinerSet m;
  m.pcminer = [threads](const pcm_db* db, std::uint64_t sigma, pcm_result** out) {
    pcm_tree* tree = nullptr;
    if (auto st = pcm_tree_build(db, &tree); st != PCM_OK) return st;
    TreePtr owned(tree);
    return pcm_mine_tree(tree, sigma, threads, out);
  };
  m.apriori = [](const pcm_db* db, std::uint64_t sigma, pcm_result** out) {
    return pcm_mine_db(db, PCM_ALGO_APRIORI, sigma, out);
  };
  m.brute = [](const pcm_db* db, std::uint64_t sigma, pcm_result** out) {
    return pcm_mine_db(db, PCM_ALGO_BRUTE, sigma, out);
  };
  return m;
}

std::optional<std::uint64_t> resolve_min_sup(std::string_view spec, std::uint64_t transactions) {
  if (spec.empty()) return std::nullopt;
  const std::string s(spec);
  if (s.find_first_not_of("0123456789") == std::string::npos) {
    std::uint64_t v = 0;
    if (!parse_number(s, v)) return std::nullopt;
    return v;
  }
  double f = 0;
  if (!parse_number(s, f) || !(f > 0.0 && f <= 1.0)) return std::nullopt;
  const double x = f * static_cast<double>(transactions);
  // Products like 0.3 * 10 land a hair above the integer they denote.
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(x));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const MinerSet* miners) {
  CLI::App app{"Frequent itemset mining over prime-encoded transaction trees", "pcminer"};
  app.require_subcommand(1);

  CommonOptions o;
  constexpr const char* kMinSupHelp = "Absolute count, or fraction of |D| in (0,1]";
  auto add_source = [&o](CLI::App* sub) {
    auto* in = sub->add_option("--input", o.input, "Transaction file, one transaction per line");
    auto* syn = sub->add_option("--synthetic", o.synthetic, "Generate N,ITEMS,DENSITY,SEED");
    in->excludes(syn);
    sub->add_option("--threads", o.threads, "Support-query worker threads (pcminer)")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--quiet", o.quiet, "Summaries only");
  };

  auto* mine = app.add_subcommand("mine", "Mine frequent itemsets");
  add_source(mine);
  mine->add_option("--min-sup", o.min_sup, kMinSupHelp)->required();
  mine->add_option("--algo", o.algo, "pcminer | apriori | brute")->default_str("pcminer");
  mine->add_option("--stats-out", o.stats_out, "Write a stats CSV row for this run");

  auto* compare = app.add_subcommand("compare", "Run every miner and diff their outputs");
  add_source(compare);
  compare->add_option("--min-sup", o.min_sup, kMinSupHelp)->required();

  auto* bench = app.add_subcommand("bench", "Sweep thresholds and write a stats CSV");
  add_source(bench);
  bench->add_option("--sigmas", o.sigmas, "Comma separated thresholds")->required();
  bench->add_option("--algo", o.algo, "Comma separated algorithms")
      ->default_str("pcminer,apriori");
  bench->add_option("--stats-out", o.stats_out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const MinerSet fallback = default_miners(o.threads);
  try {
    if (mine->parsed()) return cmd_mine(o, out, err);
    if (compare->parsed()) return cmd_compare(o, miners ? *miners : fallback, out, err);
    return cmd_bench(o, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
}

}  // namespace pcminer::cli
