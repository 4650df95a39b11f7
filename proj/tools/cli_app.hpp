#pragma once

// Command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "pcminer/pcminer.h"

namespace pcminer::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDifferent = 1,  // compare mismatch or mining refusal
  kExitUsage = 2,      // usage, parse or I/O error
};

using MinerFn = std::function<pcm_status(const pcm_db*, std::uint64_t, pcm_result**)>;

/// Miners used by `compare`, swappable so the harness can be self-tested.
struct MinerSet {
  MinerFn pcminer;
  MinerFn apriori;
  MinerFn brute;
};

MinerSet default_miners(unsigned threads);

/// Integer text is an absolute count; anything else must be a fraction in
/// (0, 1] and becomes ceil(f * transactions).
std::optional<std::uint64_t> resolve_min_sup(std::string_view spec, std::uint64_t transactions);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const MinerSet* miners = nullptr);

}  // namespace pcminer::cli
