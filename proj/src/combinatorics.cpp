#include "wreath/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace wreath {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i)
    os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

std::uint64_t WeakComposition::total() const
{
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

namespace {

void collect_partitions(std::uint32_t remaining, std::uint32_t max_part,
                        std::vector<std::uint32_t>& prefix,
                        std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    collect_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(std::uint32_t n)
{
  std::vector<Partition> out;
  std::vector<std::uint32_t> prefix;
  collect_partitions(n, n, prefix, out);
  return out;
}

std::vector<BigNat> partition_counts_upto(std::uint32_t n)
{
  std::vector<BigNat> p(n + 1);
  p[0] = 1;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(n); ++m) {
    BigNat sum = 0;
    for (std::int64_t j = 1;; ++j) {
      std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m)
        break;
      std::int64_t g2 = j * (3 * j + 1) / 2;
      BigNat term = p[m - g1];
      if (g2 <= m)
        term += p[m - g2];
      if (j % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    p[m] = sum;
  }
  return p;
}

BigNat partition_count(std::uint32_t n) { return partition_counts_upto(n)[n]; }

WeakCompositions::iterator WeakCompositions::begin() const
{
  iterator it;
  if (h_ == 0) {
    it.done_ = n_ != 0;
    return it;
  }
  it.current_.parts.assign(h_, 0);
  it.current_.parts[0] = n_;
  it.done_ = false;
  return it;
}

WeakCompositions::iterator& WeakCompositions::iterator::operator++()
{
  auto& a = current_.parts;
  if (a.size() < 2) {
    done_ = true;
    return *this;
  }
  // a[pos-1] is the rightmost nonzero entry among all but the last slot
  std::size_t pos = a.size() - 1;
  while (pos > 0 && a[pos - 1] == 0)
    --pos;
  if (pos == 0) {
    done_ = true;
    return *this;
  }
  std::size_t k = pos - 1;
  std::uint32_t rest = 0;
  for (std::size_t j = k + 1; j < a.size(); ++j) {
    rest += a[j];
    a[j] = 0;
  }
  --a[k];
  a[k + 1] = rest + 1;
  return *this;
}

BigNat multinomial(std::uint64_t n, std::span<const std::uint32_t> alpha)
{
  std::uint64_t total = 0;
  for (auto a : alpha)
    total += a;
  if (total != n)
    throw std::invalid_argument("multinomial: parts sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(n));
  BigNat out = factorial(n);
  for (auto a : alpha)
    out /= factorial(a);
  return out;
}

BigNat binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  BigNat out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigNat hook_length_dim(const Partition& lambda)
{
  const auto& rows = lambda.parts();
  std::vector<std::uint32_t> cols(rows.empty() ? 0 : rows[0], 0);
  for (auto len : rows)
    for (std::uint32_t j = 0; j < len; ++j)
      ++cols[j];

  BigNat hooks = 1;
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    for (std::uint32_t j = 0; j < rows[i]; ++j)
      hooks *= (rows[i] - j) + (cols[j] - i) - 1;
  return factorial(lambda.size()) / hooks;
}

TruncatedSeries::TruncatedSeries(std::uint32_t order)
: coeffs_(order + 1, BigNat(0)), order_(order)
{
  coeffs_[0] = 1;
}

TruncatedSeries::TruncatedSeries(std::vector<BigNat> coefficients,
                                 std::uint32_t order)
: coeffs_(std::move(coefficients)), order_(order)
{
  coeffs_.resize(order + 1, BigNat(0));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
  const std::uint32_t order = std::min(a.order_, b.order_);
  std::vector<BigNat> out(order + 1, BigNat(0));
  for (std::uint32_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::uint32_t j = 0; i + j <= order; ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries series_pow_truncated(const TruncatedSeries& s, const BigNat& e,
                                     std::uint32_t order)
{
  TruncatedSeries result(order);
  if (e == 0)
    return result;
  TruncatedSeries base(s.coefficients(), order);
  const std::size_t top = boost::multiprecision::msb(e);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, bit))
      result = result * base;
  }
  return result;
}

}  // namespace wreath
