#pragma once

#include <cstdint>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/rtree.hpp"

namespace wreath {

/// Inputs of one application of the wreath-product FFT bound
///   T(G wr S_n) <= n T(G) |G wr S_{n-1}| + n T(G wr S_{n-1}) |G|
///                  + n^3 2^{|G^|} |G wr S_n|.
struct FFTStepInput
{
  std::uint32_t n = 1;
  BigNat t_g;                // T(G)
  BigNat order_g;            // |G|
  BigNat t_prev;             // T(G wr S_{n-1})
  BigNat order_prev_wreath;  // |G wr S_{n-1}|
  BigNat nirreps_g;          // |G^|, number of irreducibles of G
  BigNat order_wreath;       // |G wr S_n|
};

/// The three summands, kept apart for reporting.
struct FFTStepTerms
{
  BigNat from_base;     // n T(G) |G wr S_{n-1}|
  BigNat from_prev;     // n T(G wr S_{n-1}) |G|
  BigNat from_irreps;   // n^3 2^{|G^|} |G wr S_n|

  BigNat total() const { return from_base + from_prev + from_irreps; }
};

/// Throws std::invalid_argument unless order_wreath = order_g^n n!, and
/// BoundOverflowGuard if 2^{|G^|} would need more than `bit_cap` bits.
FFTStepTerms fft_bound_terms(const FFTStepInput& in,
                             std::uint64_t bit_cap = 1'000'000);

inline BigNat fft_bound_step(const FFTStepInput& in,
                             std::uint64_t bit_cap = 1'000'000)
{ return fft_bound_terms(in, bit_cap).total(); }

struct FFTLevel
{
  std::size_t k = 0;
  std::uint32_t n = 0;        // r_k
  BigNat order_g;             // |W(r|k-1)|
  BigNat order_prev_wreath;   // |W(r|k-1) wr S_{r_k - 1}|
  BigNat nirreps_g;           // N(r|k-1), corrected or paper count
  BigNat t_bound;             // T(W(r|k))
  BigNat order;               // |W(r|k)|
  BigNat naive;               // |W(r|k)|^2
  FFTStepTerms last_step;     // summands of the m = r_k step (zero if r_k = 1)

  BigRational reduced() const { return BigRational(t_bound, order); }
  BigRational ratio_to_naive() const { return BigRational(t_bound, naive); }
  bool beats_naive() const { return t_bound < naive; }

  /// The 2^{|G^|} summand is at least the other two combined.
  bool dominated_by_irreps_term() const
  { return n > 1 && last_step.from_irreps >= last_step.from_base + last_step.from_prev; }
};

struct FFTBoundTable
{
  std::vector<FFTLevel> levels;
};

/// Walks the chain from T(trivial) = 0. Level k unrolls
/// T(W(r|k-1) wr S_m) over m = 2..r_k starting from
/// T(W(r|k-1) wr S_1) = T(W(r|k-1)).
FFTBoundTable fft_bound_chain(const RVector& r, bool paper_count = false,
                              std::uint64_t bit_cap = 1'000'000);

}  // namespace wreath
