#include "wreath/irreps.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreath/combinatorics.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

// Coefficient of x^n in (sum_m c(m) x^m)^h for c given up to degree n.
BigNat power_coefficient(std::vector<BigNat> base, const BigNat& h, std::uint32_t n)
{
  TruncatedSeries s(std::move(base), n);
  return series_pow_truncated(s, h, n)[n];
}

std::vector<BigNat> factorials_upto(std::uint32_t n)
{
  std::vector<BigNat> out(n + 1);
  out[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m)
    out[m] = out[m - 1] * m;
  return out;
}

// Above this h the recurrence table is replaced by series exponentiation.
constexpr std::uint64_t kRecurrenceMaxH = 4096;

}  // namespace

BigNat composition_factorial_sum(std::uint32_t n, std::uint64_t h)
{
  const auto fact = factorials_upto(n);
  // row[m] = P(m, current h)
  std::vector<BigNat> row(n + 1, BigNat(0));
  row[0] = 1;
  for (std::uint64_t step = 0; step < h; ++step) {
    std::vector<BigNat> next(n + 1, BigNat(0));
    for (std::uint32_t m = 0; m <= n; ++m)
      for (std::uint32_t j = 0; j <= m; ++j)
        next[m] += fact[j] * row[m - j];
    row = std::move(next);
  }
  return row[n];
}

BigNat composition_factorial_sum(std::uint32_t n, const BigNat& h)
{
  if (h <= kRecurrenceMaxH)
    return composition_factorial_sum(n, h.convert_to<std::uint64_t>());
  return power_coefficient(factorials_upto(n), h, n);
}

ChainStats chain_stats(const RVector& r, std::vector<LevelStats> known)
{
  if (known.size() > r.height())
    throw std::invalid_argument("known levels exceed the chain height");
  for (std::size_t i = 0; i < known.size(); ++i)
    if (known[i].k != i + 1 || known[i].r_k != r.r(i + 1))
      throw std::invalid_argument("known levels do not belong to this chain");

  ChainStats out{std::move(known)};
  BigNat order = 1, count = 1, count_paper = 1;
  if (!out.levels.empty()) {
    order = out.top().order;
    count = out.top().irrep_count;
    count_paper = out.top().irrep_count_paper;
  }
  for (std::size_t k = out.levels.size() + 1; k <= r.height(); ++k) {
    const std::uint32_t n = r.r(k);
    order = pow(order, n) * factorial(n);
    const BigNat prev = count;
    count = power_coefficient(partition_counts_upto(n), prev, n);
    count_paper = k == 1 ? partition_count(n)
                         : composition_factorial_sum(n, count_paper);
    out.levels.push_back({k, n, order, count, count_paper});
  }
  return out;
}

BigNat group_order(const RVector& r)
{
  BigNat order = 1;
  for (auto n : r.entries())
    order = pow(order, n) * factorial(n);
  return order;
}

BigNat count_irreps(const RVector& r)
{
  BigNat count = 1;
  for (auto n : r.entries())
    count = power_coefficient(partition_counts_upto(n), count, n);
  return count;
}

BigNat count_irreps_paper(const RVector& r)
{
  BigNat count = partition_count(r.r(1));
  for (std::size_t k = 2; k <= r.height(); ++k)
    count = composition_factorial_sum(r.r(k), count);
  return count;
}

BigNat irrep_dimension(const CanonicalLabel& label, CompanionVariant variant)
{
  return companion(label, variant).product();
}

void for_each_irrep(const RVector& r, std::uint64_t limit,
                    CompanionVariant variant,
                    const std::function<void(const IrrepRecord&)>& sink)
{
  const BigNat predicted = count_irreps(r);
  if (predicted > limit)
    throw CountExceedsLimit(predicted, BigNat(limit));
  CanonicalEnumerator(r, limit).for_each([&](const CanonicalLabel& label) {
    sink(IrrepRecord{label, irrep_dimension(label, variant)});
    return true;
  });
}

Spectrum spectrum(const RVector& r, std::uint64_t limit, CompanionVariant variant)
{
  Spectrum out;
  for_each_irrep(r, limit, variant, [&](const IrrepRecord& rec) {
    out.summary.count += 1;
    out.summary.sum_d += rec.dimension;
    out.summary.sum_d2 += rec.dimension * rec.dimension;
    out.summary.max_d = std::max(out.summary.max_d, rec.dimension);
    out.records.push_back(rec);
  });
  return out;
}

std::string to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::pass: return "PASS";
  case CheckStatus::fail: return "FAIL";
  case CheckStatus::expected_discrepancy: return "EXPECTED-DISCREPANCY";
  case CheckStatus::skipped: return "SKIPPED";
  }
  return "?";
}

bool VerifyReport::passed() const
{
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  });
}

namespace {

void settle(CheckResult& c, bool strict_paper)
{
  if (!c.expected || !c.actual) {
    c.status = CheckStatus::skipped;
    return;
  }
  if (*c.expected == *c.actual)
    c.status = CheckStatus::pass;
  else if (c.paper_variant && !strict_paper)
    c.status = CheckStatus::expected_discrepancy;
  else
    c.status = CheckStatus::fail;
}

CheckResult make_check(std::string name, std::string description,
                       std::optional<BigNat> expected, std::optional<BigNat> actual,
                       bool paper_variant)
{
  CheckResult c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.paper_variant = paper_variant;
  return c;
}

BigNat sum_of_squares(const RVector& r, std::uint64_t limit, CompanionVariant v)
{
  return spectrum(r, limit, v).summary.sum_d2;
}

}  // namespace

VerifyReport verify_identities(const RVector& r, const VerifyOptions& options)
{
  VerifyReport report{r, {}};
  const BigNat order = group_order(r);
  const BigNat count = count_irreps(r);
  const BigNat count_paper = count_irreps_paper(r);
  const CompanionVariant variant = options.paper_companion
                                     ? CompanionVariant::paper
                                     : CompanionVariant::corrected;

  const Spectrum spec = spectrum(r, options.limit, variant);
  const BigNat& reported_count = options.paper_count ? count_paper : count;

  CheckResult sum_sq = make_check("sum_d2_equals_order",
                                  "sum of squared degrees equals the group order",
                                  order, spec.summary.sum_d2, options.paper_companion);
  report.checks.push_back(sum_sq);

  CheckResult enumerated = make_check("enumeration_equals_count",
                                      "canonical label count equals the irreducible count",
                                      reported_count, spec.summary.count, options.paper_count);
  report.checks.push_back(enumerated);

  CheckResult classes = make_check("count_equals_conjugacy_classes",
                                   "irreducible count equals the oracle conjugacy class count",
                                   std::nullopt, reported_count, options.paper_count);
  const bool degree_ok = [&] {
    BigNat degree = 1;
    for (auto n : r.entries())
      degree *= n;
    return degree <= options.caps.degree;
  }();
  if (degree_ok && order <= options.caps.order) {
    auto g = oracle::wreath_generators(r, options.caps.degree);
    classes.expected = oracle::conjugacy_class_count(g, options.caps.order);
  } else {
    classes.note = "oracle group exceeds caps";
  }
  report.checks.push_back(classes);

  CheckResult orbits = make_check("count_equals_label_orbits",
                                  "irreducible count equals the brute-force label orbit count",
                                  std::nullopt, reported_count, options.paper_count);
  try {
    orbits.expected = oracle::orbit_count_bruteforce(r, options.caps);
  } catch (const CapExceeded&) {
    orbits.note = "label orbit search exceeds caps";
  }
  report.checks.push_back(orbits);

  if (!options.paper_companion) {
    CheckResult c = make_check("paper_companion_sum_d2",
                               "sum of squared degrees under the uncorrected companion label",
                               order, sum_of_squares(r, options.limit, CompanionVariant::paper),
                               true);
    report.checks.push_back(c);
  }
  if (!options.paper_count) {
    CheckResult c = make_check("paper_count_equals_count",
                               "composition-factorial count equals the irreducible count",
                               count, count_paper, true);
    report.checks.push_back(c);
  }

  for (auto& c : report.checks)
    settle(c, options.strict_paper);
  return report;
}

}  // namespace wreath
