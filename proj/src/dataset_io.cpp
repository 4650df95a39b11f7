#include "pcminer/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "pcminer/error.hpp"

namespace pcminer {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

template <class Int>
bool parse_uint(std::string_view token, Int& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

}  // namespace

LoadedDatabase parse_transactions(std::istream& in) {
  LoadedDatabase out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<ItemId> items;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      if (j > i) {
        std::string_view token(line.data() + i, j - i);
        ItemId id = 0;
        if (!parse_uint(token, id))
          throw ParseError(line_no, "invalid item id '" + std::string(token) + "'");
        items.push_back(id);
      }
      i = j;
    }
    if (!out.db.add(Itemset(std::move(items)))) ++out.skipped_lines;
  }
  if (in.bad()) throw IoError("read failure");
  return out;
}

LoadedDatabase load_transactions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_transactions(in);
}

void write_transactions(const TransactionDB& db, std::ostream& out) {
  for (const auto& t : db.transactions) out << t.items << '\n';
}

TransactionDB generate_synthetic(const SyntheticSpec& spec) {
  if (spec.num_transactions == 0) throw InvalidArgument("num_transactions must be positive");
  if (spec.num_items == 0) throw InvalidArgument("num_items must be positive");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw InvalidArgument("density must be in (0, 1]");
  if (spec.density * spec.num_items < 1.0)
    throw InvalidArgument("density * num_items must be at least 1");

  std::mt19937_64 gen(spec.seed);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  TransactionDB db;
  for (std::uint64_t t = 0; t < spec.num_transactions; ++t) {
    std::vector<ItemId> items;
    while (items.empty()) {
      for (ItemId i = 0; i < spec.num_items; ++i)
        if (uniform() < spec.density) items.push_back(i);
    }
    db.add(Itemset(std::move(items)));
  }
  return db;
}

void write_stats(const std::vector<StatsRow>& rows, std::ostream& out) {
  out << kStatsHeader << '\n';
  for (const auto& r : rows) {
    for (const auto* name : {&r.dataset, &r.algorithm})
      if (name->find_first_of(",\n\r") != std::string::npos)
        throw InvalidArgument("stats field may not contain commas or newlines: " + *name);
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), r.runtime_ms);
    out << r.dataset << ',' << r.algorithm << ',' << r.sigma << ',' << r.num_frequent << ','
        << r.num_candidates << ',' << std::string_view(buf, res.ptr - buf) << '\n';
  }
}

void write_stats(const std::vector<StatsRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_stats(rows, out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<StatsRow> read_stats(std::istream& in) {
  std::vector<StatsRow> rows;
  std::string line;
  if (!std::getline(in, line) || line != kStatsHeader) throw ParseError(1, "missing stats header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = split_commas(line);
    if (f.size() != 6) throw ParseError(line_no, "expected 6 fields");
    StatsRow r;
    r.dataset = f[0];
    r.algorithm = f[1];
    if (!parse_uint(f[2], r.sigma) || !parse_uint(f[3], r.num_frequent) ||
        !parse_uint(f[4], r.num_candidates))
      throw ParseError(line_no, "invalid integer field");
    auto [ptr, ec] = std::from_chars(f[5].data(), f[5].data() + f[5].size(), r.runtime_ms);
    if (ec != std::errc{} || ptr != f[5].data() + f[5].size())
      throw ParseError(line_no, "invalid runtime");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<StatsRow> read_stats(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_stats(in);
}

}  // namespace pcminer
