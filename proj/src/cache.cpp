#include "wreath/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace wreath {

StatsCache StatsCache::load(const std::filesystem::path& path)
{
  StatsCache cache;
  std::ifstream in(path);
  if (!in)
    return cache;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.value("version", 0) != 1)
      return cache;
    for (const auto& [key, e] : j.at("entries").items()) {
      RVector::parse(key);
      cache.entries_[key] = {BigNat(e.at("order").get<std::string>()),
                             BigNat(e.at("irreps").get<std::string>()),
                             BigNat(e.at("irreps_paper").get<std::string>())};
    }
  } catch (const std::exception&) {
    return StatsCache{};
  }
  return cache;
}

void StatsCache::save(const std::filesystem::path& path) const
{
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [key, e] : entries_)
    entries[key] = {{"order", e.order.str()},
                    {"irreps", e.irreps.str()},
                    {"irreps_paper", e.irreps_paper.str()}};
  nlohmann::ordered_json j = {{"version", 1}, {"entries", entries}};
  std::ofstream(path) << j.dump(2) << '\n';
}

std::vector<LevelStats> StatsCache::longest_prefix(const RVector& r) const
{
  std::vector<LevelStats> out;
  for (std::size_t j = 1; j <= r.height(); ++j) {
    auto it = entries_.find(r.prefix(j).to_csv());
    if (it == entries_.end())
      break;
    out.push_back({j, r.r(j), it->second.order, it->second.irreps,
                   it->second.irreps_paper});
  }
  return out;
}

void StatsCache::store(const RVector& r, const ChainStats& stats)
{
  for (const auto& level : stats.levels)
    entries_[r.prefix(level.k).to_csv()] = {level.order, level.irrep_count,
                                            level.irrep_count_paper};
}

}  // namespace wreath
