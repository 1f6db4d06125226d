#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <span>
#include <vector>

#include "wreath/bignat.hpp"

namespace wreath {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
///
/// Partitions compare lexicographically on their parts; "decreasing
/// lexicographic order" means (3) > (2,1) > (1,1,1).
class Partition
{
public:
  Partition() = default;

  /// Throws std::invalid_argument if `parts` is not weakly decreasing or
  /// contains a zero.
  explicit Partition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::uint64_t size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition& a, const Partition& b)
  { return a.parts_ == b.parts_; }

  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b)
  { return a.parts_ <=> b.parts_; }

private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// An ordered tuple of nonnegative integers with a fixed length; zeros stay
/// in place.
struct WeakComposition
{
  std::vector<std::uint32_t> parts;

  std::size_t length() const { return parts.size(); }
  std::uint64_t total() const;

  friend bool operator==(const WeakComposition&,
                         const WeakComposition&) = default;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(std::uint32_t n);

/// p(n) via Euler's pentagonal number recurrence.
BigNat partition_count(std::uint32_t n);

/// p(0), ..., p(n).
std::vector<BigNat> partition_counts_upto(std::uint32_t n);

/// Restartable stream of the weak compositions of n into h parts, in
/// decreasing lexicographic order: (2,0), (1,1), (0,2) for n = h = 2.
/// With h = 0 the stream holds the empty composition iff n = 0.
class WeakCompositions
{
public:
  WeakCompositions(std::uint32_t n, std::size_t h) : n_(n), h_(h) {}

  class iterator
  {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeakComposition;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeakComposition*;
    using reference = const WeakComposition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b)
    { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

  private:
    friend class WeakCompositions;
    WeakComposition current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

private:
  std::uint32_t n_;
  std::size_t h_;
};

inline WeakCompositions weak_compositions(std::uint32_t n, std::size_t h)
{ return {n, h}; }

/// n! / prod alpha_i!. Throws std::invalid_argument unless sum alpha = n.
BigNat multinomial(std::uint64_t n, std::span<const std::uint32_t> alpha);

inline BigNat multinomial(std::uint64_t n, const WeakComposition& alpha)
{ return multinomial(n, alpha.parts); }

BigNat binomial(std::uint64_t n, std::uint64_t k);

/// Dimension of the irreducible of S_n indexed by lambda, n! / prod(hooks).
BigNat hook_length_dim(const Partition& lambda);

/// Power series c_0 + c_1 x + ... + c_n x^n; products drop degree > n.
class TruncatedSeries
{
public:
  /// The constant series 1 truncated at `order`.
  explicit TruncatedSeries(std::uint32_t order);

  /// Coefficients beyond `order` are discarded, missing ones are zero.
  TruncatedSeries(std::vector<BigNat> coefficients, std::uint32_t order);

  std::uint32_t order() const { return order_; }
  const BigNat& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<BigNat>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

private:
  std::vector<BigNat> coeffs_;
  std::uint32_t order_;
};

/// s^e mod x^(order+1) by binary exponentiation over the bits of e.
TruncatedSeries series_pow_truncated(const TruncatedSeries& s, const BigNat& e,
                                     std::uint32_t order);

}  // namespace wreath
