#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wreath/errors.hpp"
#include "wreath/irreps.hpp"
#include "wreath/oracle.hpp"

using namespace wreath;

namespace {

std::vector<RVector> shapes(std::uint32_t max_entry, std::uint64_t max_product,
                            int max_height = 4)
{
  std::vector<RVector> out;
  std::vector<std::vector<std::uint32_t>> frontier{{}};
  for (int height = 1; height <= max_height; ++height) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : frontier)
      for (std::uint32_t v = 1; v <= max_entry; ++v) {
        auto e = prefix;
        e.push_back(v);
        std::uint64_t prod = 1;
        for (auto x : e)
          prod *= x;
        if (prod <= max_product) {
          out.emplace_back(e);
          next.push_back(e);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// Induced-representation degree [K:H] * prod dim(rho_i)^alpha_i * dim(sigma),
// read straight off the label tree.
BigNat induced_dimension(const LabelNode& node, const RVector& r, std::size_t level)
{
  if (level == 1)
    return hook_length_dim(std::get<Partition>(node.value));
  const auto& sigma = std::get<YoungIrrep>(node.value);
  BigNat d = factorial(r.r(level));
  for (auto a : sigma.alpha())
    d /= factorial(a);
  for (const auto& s : sigma.shapes())
    d *= hook_length_dim(s);
  for (const auto& c : node.children)
    d *= induced_dimension(c, r, level - 1);
  return d;
}

std::vector<BigNat> sorted_dims(const Spectrum& s)
{
  std::vector<BigNat> out;
  for (const auto& rec : s.records)
    out.push_back(rec.dimension);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigNat> nats(std::initializer_list<int> xs)
{
  std::vector<BigNat> out;
  for (int x : xs)
    out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("group_order")
{
  for (std::uint32_t n = 1; n <= 7; ++n)
    CHECK(group_order(RVector({n})) == factorial(n));

  auto g22 = oracle::wreath_generators(RVector({2, 2}));
  CHECK(group_order(RVector({2, 2})) == oracle::element_count(g22));
  CHECK(group_order(RVector({2, 2})) == 8);
  auto g222 = oracle::wreath_generators(RVector({2, 2, 2}));
  CHECK(group_order(RVector({2, 2, 2})) == oracle::element_count(g222));
  CHECK(group_order(RVector({2, 2, 2})) == 128);

  for (const auto& r : shapes(5, 400)) {
    if (r.height() < 2)
      continue;
    const RVector below = r.prefix(r.height() - 1);
    CHECK(group_order(r) == pow(group_order(below), r.top()) * factorial(r.top()));
  }
}

TEST_CASE("count_irreps")
{
  CHECK(count_irreps(RVector({4})) == 5);
  for (std::uint32_t n = 1; n <= 12; ++n)
    CHECK(count_irreps(RVector({n})) == partition_count(n));
  CHECK(count_irreps(RVector({2, 2})) == 5);
  CHECK(count_irreps(RVector({2, 3})) == 10);
}

TEST_CASE("count_irreps agrees with the oracle on its feasible range")
{
  int checked = 0;
  for (const auto& r : shapes(10, 10)) {
    if (group_order(r) > 100'000)
      continue;
    CAPTURE(r.to_csv());
    auto g = oracle::wreath_generators(r);
    CHECK(count_irreps(r) == oracle::conjugacy_class_count(g));
    CHECK(count_irreps(r) == enumerate_canonical(r).size());
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("count_irreps_paper")
{
  CHECK(count_irreps_paper(RVector({2, 2})) == 5);

  BigNat direct = 0;
  for (const auto& a : weak_compositions(3, 2))
    direct += factorial(a.parts[0]) * factorial(a.parts[1]);
  CHECK(direct == 16);
  CHECK(count_irreps_paper(RVector({2, 3})) == direct);
  CHECK(count_irreps(RVector({2, 3})) == 10);

  BigNat direct32 = 0;
  for (const auto& a : weak_compositions(2, 3))
    direct32 += factorial(a.parts[0]) * factorial(a.parts[1]) * factorial(a.parts[2]);
  CHECK(direct32 == 9);
  CHECK(count_irreps_paper(RVector({3, 2})) == 9);
  CHECK(count_irreps(RVector({3, 2})) == 9);

  for (const auto& r : shapes(2, 1u << 12, 6))
    CHECK(count_irreps_paper(r) == count_irreps(r));
}

TEST_CASE("composition factorial sum: recurrence, definition and series agree")
{
  for (std::uint32_t n = 0; n <= 6; ++n)
    for (std::uint64_t h = 0; h <= 6; ++h) {
      BigNat by_definition = 0;
      for (const auto& a : weak_compositions(n, h)) {
        BigNat prod = 1;
        for (auto x : a.parts)
          prod *= factorial(x);
        by_definition += prod;
      }
      CHECK(composition_factorial_sum(n, h) == by_definition);
    }
  for (std::uint32_t n = 0; n <= 4; ++n)
    CHECK(composition_factorial_sum(n, BigNat(5000)) ==
          composition_factorial_sum(n, std::uint64_t{5000}));
}

TEST_CASE("chain_stats reuses known levels")
{
  const RVector r({2, 3, 4});
  const ChainStats full = chain_stats(r);
  REQUIRE(full.levels.size() == 3);
  CHECK(full.levels[1].order == 48);
  CHECK(full.levels[1].irrep_count == 10);
  CHECK(full.levels[1].irrep_count_paper == 16);
  CHECK(full.levels[1].counts_differ());
  CHECK_FALSE(full.levels[0].counts_differ());

  const ChainStats resumed = chain_stats(r, {full.levels[0], full.levels[1]});
  CHECK(resumed.levels == full.levels);

  CHECK_THROWS_AS(chain_stats(RVector({3, 3}), {full.levels[0]}), std::invalid_argument);
  for (const auto& l : full.levels)
    CHECK(l.irrep_count >= 1);
}

TEST_CASE("irrep_dimension")
{
  const auto s3 = enumerate_canonical(RVector({3}));
  REQUIRE(s3.size() == 3);
  CHECK(irrep_dimension(s3[1]) == 2);
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_canonical(RVector({n})))
      CHECK(irrep_dimension(l) == hook_length_dim(std::get<Partition>(l.root().value)));

  // the mixed-children label of D_4 is its 2-dimensional irreducible
  for (const auto& l : enumerate_canonical(RVector({2, 2})))
    if (std::get<YoungIrrep>(l.root().value).alpha().size() == 2)
      CHECK(irrep_dimension(l) == 2);

  for (const auto& r : shapes(4, 24))
    for (const auto& l : enumerate_canonical(r))
      CHECK(irrep_dimension(l) == induced_dimension(l.root(), r, r.height()));
}

TEST_CASE("spectrum")
{
  const Spectrum s22 = spectrum(RVector({2, 2}));
  CHECK(sorted_dims(s22) == nats({1, 1, 1, 1, 2}));
  CHECK(s22.summary.sum_d2 == 8);
  CHECK(s22.summary.count == 5);
  CHECK(s22.summary.sum_d == 6);
  CHECK(s22.summary.max_d == 2);

  const Spectrum s23 = spectrum(RVector({2, 3}));
  CHECK(sorted_dims(s23) == nats({1, 1, 1, 1, 2, 2, 3, 3, 3, 3}));
  CHECK(s23.summary.sum_d2 == 48);

  const Spectrum s32 = spectrum(RVector({3, 2}));
  CHECK(sorted_dims(s32) == nats({1, 1, 1, 1, 2, 4, 4, 4, 4}));
  CHECK(s32.summary.sum_d2 == 72);

  const Spectrum paper23 = spectrum(RVector({2, 3}), 1'000'000, CompanionVariant::paper);
  CHECK(paper23.summary.sum_d2 == 42);

  try {
    spectrum(RVector({2, 3, 4}), 100);
    FAIL("expected CountExceedsLimit");
  } catch (const CountExceedsLimit& e) {
    CHECK(e.predicted() == count_irreps(RVector({2, 3, 4})));
  }
}

TEST_CASE("sum of squared degrees equals the group order")
{
  int checked = 0;
  for (const auto& r : shapes(5, 30)) {
    if (count_irreps(r) > 10'000 || group_order(r) > 100'000)
      continue;
    CAPTURE(r.to_csv());
    CHECK(spectrum(r).summary.sum_d2 == group_order(r));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("verify_identities")
{
  const VerifyReport r22 = verify_identities(RVector({2, 2}));
  CHECK(r22.passed());
  for (const auto& c : r22.checks)
    CHECK(c.status == CheckStatus::pass);

  const VerifyReport r222 = verify_identities(RVector({2, 2, 2}));
  CHECK(r222.passed());
  CHECK(r222.checks[0].expected == BigNat(128));
  for (int i = 0; i < 4; ++i)
    CHECK(r222.checks[i].status == CheckStatus::pass);

  const VerifyReport r23 = verify_identities(RVector({2, 3}));
  CHECK(r23.passed());
  auto find = [](const VerifyReport& rep, const std::string& name) {
    return *std::find_if(rep.checks.begin(), rep.checks.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  };
  CHECK(find(r23, "paper_companion_sum_d2").actual == BigNat(42));
  CHECK(find(r23, "paper_companion_sum_d2").status == CheckStatus::expected_discrepancy);
  CHECK(find(r23, "paper_count_equals_count").actual == BigNat(16));

  VerifyOptions paper;
  paper.paper_companion = true;
  const VerifyReport p23 = verify_identities(RVector({2, 3}), paper);
  CHECK(p23.passed());
  CHECK(find(p23, "sum_d2_equals_order").actual == BigNat(42));
  CHECK(find(p23, "sum_d2_equals_order").status == CheckStatus::expected_discrepancy);

  paper.strict_paper = true;
  CHECK_FALSE(verify_identities(RVector({2, 3}), paper).passed());

  // oracle checks are skipped, not failed, outside the caps
  const VerifyReport big = verify_identities(RVector({2, 3, 4}));
  CHECK(big.passed());
  CHECK(find(big, "count_equals_conjugacy_classes").status == CheckStatus::skipped);
  CHECK(find(big, "sum_d2_equals_order").status == CheckStatus::pass);
}

TEST_CASE("count_irreps scales by coefficient extraction")
{
  const BigNat n = count_irreps(RVector({2, 3, 4, 5}));
  CHECK(n > count_irreps(RVector({2, 3, 4})));
  CHECK(count_irreps(RVector({2, 3, 4})) == enumerate_canonical(RVector({2, 3, 4})).size());
  // a deep chain whose counts have hundreds of digits
  const BigNat deep = count_irreps(RVector({2, 3, 4, 5, 3, 2}));
  CHECK(deep.str().size() > 20);
}
