#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcminer/transaction_db.hpp"

namespace pcminer {

struct LoadedDatabase {
  TransactionDB db;
  /// Blank (or empty after deduplication) lines that were dropped.
  std::size_t skipped_lines = 0;
};

/// One transaction per line, base-10 item ids separated by spaces or tabs.
/// Throws ParseError (with line number) or IoError.
LoadedDatabase load_transactions(const std::filesystem::path& path);
LoadedDatabase parse_transactions(std::istream& in);

/// Inverse of parse_transactions for a database without blank lines.
void write_transactions(const TransactionDB& db, std::ostream& out);

/// Bernoulli generator. Transaction t includes item i when the next draw of
/// std::mt19937_64(seed), mapped to [0,1) as (draw >> 11) * 2^-53, is below
/// `density`. Items are drawn in ascending id order 0..num_items-1 and an
/// all-empty draw is redrawn from the same stream.
struct SyntheticSpec {
  std::uint64_t num_transactions = 1;
  std::uint32_t num_items = 1;
  double density = 1.0;
  std::uint64_t seed = 0;
};

/// Throws InvalidArgument when the spec is out of range.
TransactionDB generate_synthetic(const SyntheticSpec& spec);

struct StatsRow {
  std::string dataset;
  std::string algorithm;
  std::uint64_t sigma = 0;
  std::uint64_t num_frequent = 0;
  std::uint64_t num_candidates = 0;
  double runtime_ms = 0.0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

inline constexpr const char* kStatsHeader =
    "dataset,algo,min_sup,num_frequent,num_candidates,runtime_ms";

void write_stats(const std::vector<StatsRow>& rows, std::ostream& out);
/// Throws IoError when the path cannot be written.
void write_stats(const std::vector<StatsRow>& rows, const std::filesystem::path& path);

/// Parses a file produced by write_stats. Throws ParseError or IoError.
std::vector<StatsRow> read_stats(const std::filesystem::path& path);
std::vector<StatsRow> read_stats(std::istream& in);

}  // namespace pcminer
