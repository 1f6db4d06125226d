#include "wreath/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "wreath/cache.hpp"
#include "wreath/errors.hpp"
#include "wreath/fftbound.hpp"
#include "wreath/irreps.hpp"
#include "wreath/label_json.hpp"

namespace wreath::cli {

namespace {

// Row-oriented output shared by the table and csv formats.
class Grid
{
public:
  explicit Grid(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& os, Format format) const
  {
    if (format == Format::csv) {
      write_csv_row(os, header_);
      for (const auto& row : rows_)
        write_csv_row(os, row);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& row : rows_)
      widen(row);
    write_table_row(os, header_, width);
    for (const auto& row : rows_)
      write_table_row(os, row, width);
  }

private:
  static void write_csv_row(std::ostream& os, const std::vector<std::string>& row)
  {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        os << ',';
      if (row[i].find_first_of(",\"") == std::string::npos) {
        os << row[i];
        continue;
      }
      os << '"';
      for (char c : row[i])
        os << (c == '"' ? "\"\"" : std::string(1, c));
      os << '"';
    }
    os << '\n';
  }

  static void write_table_row(std::ostream& os, const std::vector<std::string>& row,
                              const std::vector<std::size_t>& width)
  {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        line += "  ";
      line += row[i];
      if (i + 1 < row.size())
        line.append(width[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CompanionVariant companion_variant(const RunConfig& c)
{
  return c.paper_companion ? CompanionVariant::paper : CompanionVariant::corrected;
}

ordered_json json_or_null(const std::optional<BigNat>& v)
{
  return v ? ordered_json(v->str()) : ordered_json(nullptr);
}

std::string text_or_dash(const std::optional<BigNat>& v)
{
  return v ? v->str() : "-";
}

}  // namespace

int cmd_stats(const RunConfig& config, std::ostream& out)
{
  std::optional<StatsCache> cache;
  std::vector<LevelStats> known;
  if (config.cache_path) {
    cache = StatsCache::load(*config.cache_path);
    known = cache->longest_prefix(config.r);
  }
  const ChainStats stats = chain_stats(config.r, std::move(known));
  if (cache) {
    cache->store(config.r, stats);
    cache->save(*config.cache_path);
  }

  if (config.format == Format::json) {
    ordered_json levels = ordered_json::array();
    for (const auto& l : stats.levels)
      levels.push_back({{"k", l.k},
                        {"r_k", l.r_k},
                        {"order", l.order.str()},
                        {"irreps", l.irrep_count.str()},
                        {"irreps_paper", l.irrep_count_paper.str()},
                        {"differ", l.counts_differ()}});
    out << ordered_json{{"r", config.r.entries()}, {"levels", levels}}.dump()
        << '\n';
    return kPass;
  }
  Grid grid({"k", "r_k", "order", "irreps", "irreps_paper", "note"});
  for (const auto& l : stats.levels)
    grid.add({std::to_string(l.k), std::to_string(l.r_k), l.order.str(),
              l.irrep_count.str(), l.irrep_count_paper.str(),
              l.counts_differ() ? "DIFFER" : ""});
  grid.write(out, config.format);
  return kPass;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out)
{
  SpectrumSummary summary;
  Grid grid({"index", "dimension", "label"});
  std::uint64_t index = 0;
  for_each_irrep(config.r, config.limit, companion_variant(config),
                 [&](const IrrepRecord& rec) {
                   summary.count += 1;
                   summary.sum_d += rec.dimension;
                   summary.sum_d2 += rec.dimension * rec.dimension;
                   summary.max_d = std::max(summary.max_d, rec.dimension);
                   if (config.format == Format::json)
                     out << ordered_json{{"index", index},
                                         {"dimension", rec.dimension.str()},
                                         {"label", label_to_json(rec.label.label())}}
                              .dump()
                         << '\n';
                   else
                     grid.add({std::to_string(index), rec.dimension.str(),
                               to_text(rec.label.root())});
                   ++index;
                 });
  if (config.format == Format::json)
    return kPass;
  grid.write(out, config.format);
  if (config.format == Format::table)
    out << "# count " << summary.count << "  sum_d " << summary.sum_d
        << "  sum_d2 " << summary.sum_d2 << "  max_d " << summary.max_d
        << "  order " << group_order(config.r) << '\n';
  return kPass;
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
  VerifyOptions options;
  options.limit = config.limit;
  options.paper_companion = config.paper_companion;
  options.paper_count = config.paper_count;
  options.strict_paper = config.strict_paper;
  options.caps = config.caps;
  const VerifyReport report = verify_identities(config.r, options);

  if (config.format == Format::json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"description", c.description},
                        {"expected", json_or_null(c.expected)},
                        {"actual", json_or_null(c.actual)},
                        {"paper_variant", c.paper_variant},
                        {"status", to_string(c.status)},
                        {"note", c.note}});
    out << ordered_json{{"r", config.r.entries()},
                        {"passed", report.passed()},
                        {"checks", checks}}
             .dump()
        << '\n';
  } else {
    Grid grid({"check", "expected", "actual", "status", "variant"});
    for (const auto& c : report.checks)
      grid.add({c.name, text_or_dash(c.expected), text_or_dash(c.actual),
                to_string(c.status), c.paper_variant ? "paper" : "corrected"});
    grid.write(out, config.format);
    if (config.format == Format::table) {
      for (const auto& c : report.checks) {
        if (!c.note.empty())
          out << "note: " << c.name << ": " << c.note << '\n';
        if (c.paper_variant && c.status != CheckStatus::pass && c.expected && c.actual)
          out << "note: paper variant " << c.name << " = " << *c.actual
              << " != " << *c.expected << '\n';
      }
      out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
  }
  return report.passed() ? kPass : kIdentityFailure;
}

int cmd_fft(const RunConfig& config, std::ostream& out)
{
  const FFTBoundTable table =
    fft_bound_chain(config.r, config.paper_count, config.bound_bit_cap);

  if (config.format == Format::json) {
    ordered_json levels = ordered_json::array();
    for (const auto& l : table.levels)
      levels.push_back({{"k", l.k},
                        {"r_k", l.n},
                        {"order_g", l.order_g.str()},
                        {"order_g_wr_s_prev", l.order_prev_wreath.str()},
                        {"irreps_g", l.nirreps_g.str()},
                        {"t_bound", l.t_bound.str()},
                        {"order", l.order.str()},
                        {"naive", l.naive.str()},
                        {"ratio", to_string(l.ratio_to_naive())},
                        {"ratio_approx", approx_decimal(l.ratio_to_naive())},
                        {"reduced", to_string(l.reduced())},
                        {"reduced_approx", approx_decimal(l.reduced())},
                        {"beats_naive", l.beats_naive()},
                        {"dominated_by_irreps_term", l.dominated_by_irreps_term()}});
    out << ordered_json{{"r", config.r.entries()},
                        {"irreps_source", config.paper_count ? "paper" : "corrected"},
                        {"levels", levels}}
             .dump()
        << '\n';
    return kPass;
  }
  Grid grid({"k", "r_k", "|G|", "|G wr S_(n-1)|", "|G^|", "T_bound", "naive",
             "ratio", "ratio~", "reduced", "reduced~", "note"});
  for (const auto& l : table.levels) {
    std::string note = l.beats_naive() ? "bound<naive" : "bound>=naive";
    if (l.dominated_by_irreps_term())
      note += ";bound-dominated-by-2^N-term";
    grid.add({std::to_string(l.k), std::to_string(l.n), l.order_g.str(),
              l.order_prev_wreath.str(), l.nirreps_g.str(), l.t_bound.str(),
              l.naive.str(), to_string(l.ratio_to_naive()),
              "~" + approx_decimal(l.ratio_to_naive()), to_string(l.reduced()),
              "~" + approx_decimal(l.reduced()), note});
  }
  grid.write(out, config.format);
  if (config.format == Format::table)
    out << "# ~ marks approximate decimals (6 significant digits)\n";
  return kPass;
}

int cmd_oracle(const RunConfig& config, std::ostream& out)
{
  auto group = oracle::wreath_generators(config.r, config.caps.degree);
  const BigNat elements = oracle::element_count(group, config.caps.order);
  const BigNat classes = oracle::conjugacy_class_count(group, config.caps.order);
  const auto autos = oracle::tree_automorphisms(config.r, config.caps.automorphisms);
  const auto labels = oracle::all_valid_labels(config.r, config.caps);
  const BigNat orbits = oracle::orbit_count_bruteforce(config.r, config.caps);

  const std::vector<std::pair<std::string, std::string>> rows = {
    {"degree", std::to_string(group.degree())},
    {"generators", std::to_string(group.generators().size())},
    {"elements", elements.str()},
    {"group_order", group_order(config.r).str()},
    {"conjugacy_classes", classes.str()},
    {"tree_automorphisms", std::to_string(autos.size())},
    {"valid_labels", std::to_string(labels.size())},
    {"label_orbits", orbits.str()},
    {"count_irreps", count_irreps(config.r).str()},
  };

  if (config.format == Format::json) {
    ordered_json j = {{"r", config.r.entries()}};
    for (const auto& [k, v] : rows)
      j[k] = v;
    if (config.dump_group) {
      ordered_json elems = ordered_json::array();
      for (const auto& p : group.elements())
        elems.push_back(p.images());
      j["elements_images"] = std::move(elems);
    }
    out << j.dump() << '\n';
    return kPass;
  }
  Grid grid({"quantity", "value"});
  for (const auto& [k, v] : rows)
    grid.add({k, v});
  grid.write(out, config.format);
  if (config.dump_group)
    for (const auto& p : group.elements())
      out << ordered_json(p.images()).dump() << '\n';
  return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Representation theory of iterated wreath products of symmetric groups",
               "wreath"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string r_csv;
  std::string format = "table";
  RunConfig config;
  std::string cache_path;

  app.add_option("--r", r_csv, "r-vector, comma separated (r_1,...,r_k)")->required();
  app.add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--paper-count", config.paper_count,
               "Use the composition-factorial irreducible count");
  app.add_flag("--paper-companion", config.paper_companion,
               "Use companion labels without dim(sigma) at internal nodes");
  app.add_flag("--strict-paper", config.strict_paper,
               "Treat paper-variant discrepancies as failures");
  app.add_option("--limit", config.limit, "Enumeration limit (labels)");
  app.add_option("--cache", cache_path, "Chain statistics cache file (JSON)");
  app.add_option("--oracle-order-cap", config.caps.order, "Oracle group order cap");
  app.add_option("--oracle-degree-cap", config.caps.degree,
                 "Oracle permutation degree cap");
  app.add_option("--aut-cap", config.caps.automorphisms,
                 "Oracle tree automorphism cap");
  app.add_option("--label-cap", config.caps.labels, "Oracle valid label cap");
  app.add_option("--bound-bit-cap", config.bound_bit_cap,
                 "Largest allowed exponent in 2^|G^|");
  app.add_flag("--dump-group", config.dump_group, "Dump oracle group elements")
    ->group("");

  const std::pair<const char*, Command> commands[] = {
    {"stats", Command::stats},   {"enumerate", Command::enumerate},
    {"verify", Command::verify}, {"fft", Command::fft},
    {"oracle", Command::oracle},
  };
  const std::pair<const char*, const char*> descriptions[] = {
    {"stats", "Per-level group orders and irreducible counts"},
    {"enumerate", "Canonical labels of all irreducibles with their degrees"},
    {"verify", "Check sum of squares, counts and oracle agreement"},
    {"fft", "FFT operation count bound along the chain"},
    {"oracle", "Brute-force permutation group and label orbit counts"},
  };
  for (const auto& [name, desc] : descriptions)
    app.add_subcommand(name, desc);

  std::vector<const char*> argv{"wreath"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    config.r = RVector::parse(r_csv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  for (const auto& [name, command] : commands)
    if (app.got_subcommand(name))
      config.command = command;
  config.format = format == "json" ? Format::json
                : format == "csv"  ? Format::csv
                                   : Format::table;
  if (!cache_path.empty())
    config.cache_path = cache_path;

  try {
    switch (config.command) {
    case Command::stats: return cmd_stats(config, out);
    case Command::enumerate: return cmd_enumerate(config, out);
    case Command::verify: return cmd_verify(config, out);
    case Command::fft: return cmd_fft(config, out);
    case Command::oracle: return cmd_oracle(config, out);
    }
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  }
  return kUsage;
}

}  // namespace wreath::cli
