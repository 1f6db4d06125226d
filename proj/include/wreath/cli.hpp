#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wreath/oracle.hpp"
#include "wreath/rtree.hpp"

namespace wreath::cli {

enum ExitCode : int {
  kPass = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

enum class Command { stats, enumerate, verify, fft, oracle };
enum class Format { table, json, csv };

struct RunConfig
{
  Command command = Command::stats;
  RVector r{{1}};
  Format format = Format::table;
  bool paper_count = false;
  bool paper_companion = false;
  bool strict_paper = false;
  bool dump_group = false;
  std::uint64_t limit = 1'000'000;
  std::uint64_t bound_bit_cap = 1'000'000;
  oracle::Caps caps;
  std::optional<std::string> cache_path;
};

int cmd_stats(const RunConfig& config, std::ostream& out);
int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_fft(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), dispatches, and maps errors to
/// exit codes: 0 pass, 1 identity failure, 2 usage error, 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
