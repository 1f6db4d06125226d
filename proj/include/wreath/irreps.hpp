#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/labels.hpp"
#include "wreath/oracle.hpp"
#include "wreath/rtree.hpp"

namespace wreath {

struct LevelStats
{
  std::size_t k = 0;
  std::uint32_t r_k = 0;
  BigNat order;              // |W(r|k)|
  BigNat irrep_count;        // N(r|k), sum over alpha of prod p(alpha_i)
  BigNat irrep_count_paper;  // P(r_k, N_paper(r|k-1)), prod alpha_i! form

  bool counts_differ() const { return irrep_count != irrep_count_paper; }
  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

/// Orders and irreducible counts for every level of the chain
/// W(r|1) <= ... <= W(r|k).
struct ChainStats
{
  std::vector<LevelStats> levels;

  const LevelStats& top() const { return levels.back(); }
};

/// `known` may hold already computed levels 1..j of the same chain (e.g.
/// from a cache); they are reused as given and the rest is computed.
/// Throws std::invalid_argument if `known` does not belong to r.
ChainStats chain_stats(const RVector& r, std::vector<LevelStats> known = {});

/// |W(r|k)| = |W(r|k-1)|^{r_k} * r_k!, with |W(r|0)| = 1.
BigNat group_order(const RVector& r);

/// N(r|k): the coefficient of x^{r_k} in (sum_m p(m) x^m)^{N(r|k-1)}, with
/// N(r|0) = 1.
BigNat count_irreps(const RVector& r);

/// The composition-factorial count N_paper(r|k) = P(r_k, N_paper(r|k-1)),
/// starting from N_paper(r|1) = p(r_1). Reported for comparison only; it
/// overcounts as soon as some r_i >= 3 with i >= 2.
BigNat count_irreps_paper(const RVector& r);

/// P(n, h) = sum over weak compositions alpha of n into h parts of
/// prod alpha_i!, by the recurrence P(n,h) = sum_j j! P(n-j, h-1),
/// P(m,0) = [m = 0].
BigNat composition_factorial_sum(std::uint32_t n, std::uint64_t h);

/// Same quantity for arbitrary h, as a series coefficient.
BigNat composition_factorial_sum(std::uint32_t n, const BigNat& h);

/// Product of the companion values over all nodes. The corrected variant
/// (default) includes dim(sigma) at internal nodes.
BigNat irrep_dimension(const CanonicalLabel& label,
                       CompanionVariant variant = CompanionVariant::corrected);

struct IrrepRecord
{
  CanonicalLabel label;
  BigNat dimension;
};

struct SpectrumSummary
{
  BigNat count = 0;
  BigNat sum_d = 0;
  BigNat sum_d2 = 0;
  BigNat max_d = 0;
};

struct Spectrum
{
  std::vector<IrrepRecord> records;
  SpectrumSummary summary;
};

/// Streams (label, dimension) pairs in enumeration order. Throws
/// CountExceedsLimit with the predicted count when it exceeds `limit`.
void for_each_irrep(const RVector& r, std::uint64_t limit,
                    CompanionVariant variant,
                    const std::function<void(const IrrepRecord&)>& sink);

Spectrum spectrum(const RVector& r, std::uint64_t limit = 1'000'000,
                  CompanionVariant variant = CompanionVariant::corrected);

enum class CheckStatus { pass, fail, expected_discrepancy, skipped };

std::string to_string(CheckStatus s);

struct CheckResult
{
  std::string name;
  std::string description;
  std::optional<BigNat> expected;
  std::optional<BigNat> actual;
  bool paper_variant = false;
  CheckStatus status = CheckStatus::skipped;
  std::string note;
};

struct VerifyOptions
{
  std::uint64_t limit = 1'000'000;
  bool paper_companion = false;  // dimensions from the uncorrected companion
  bool paper_count = false;      // counts from count_irreps_paper
  bool strict_paper = false;     // paper-variant mismatches count as failures
  oracle::Caps caps;
};

struct VerifyReport
{
  RVector r;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Checks sum d^2 = |G|, enumeration length = irreducible count, and (when
/// the oracle caps allow) irreducible count = conjugacy classes = label
/// orbits. Paper-variant comparisons are always attached; mismatches there
/// are expected discrepancies unless `strict_paper` is set.
VerifyReport verify_identities(const RVector& r, const VerifyOptions& options = {});

}  // namespace wreath
