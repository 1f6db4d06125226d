#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wreath/irreps.hpp"

namespace wreath {

/// JSON file of per-prefix chain statistics, keyed by the r-prefix in csv
/// form ("2,3"). Advisory only: a missing or unreadable file is treated as
/// empty and rewritten on save.
///
///   {"version": 1, "entries": {"2": {"order": "2", "irreps": "2",
///                                    "irreps_paper": "2"}, ...}}
class StatsCache
{
public:
  static StatsCache load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// Cached levels 1..j for the longest cached prefix r|_j.
  std::vector<LevelStats> longest_prefix(const RVector& r) const;

  void store(const RVector& r, const ChainStats& stats);

  std::size_t size() const { return entries_.size(); }

private:
  struct Entry
  {
    BigNat order;
    BigNat irreps;
    BigNat irreps_paper;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace wreath
