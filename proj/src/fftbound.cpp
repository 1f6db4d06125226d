#include "wreath/fftbound.hpp"

#include <stdexcept>

#include "wreath/errors.hpp"
#include "wreath/irreps.hpp"

namespace wreath {

FFTStepTerms fft_bound_terms(const FFTStepInput& in, std::uint64_t bit_cap)
{
  if (in.order_wreath != pow(in.order_g, in.n) * factorial(in.n))
    throw std::invalid_argument("order_wreath is not |G|^n n!");
  if (in.nirreps_g > bit_cap)
    throw BoundOverflowGuard("2^" + in.nirreps_g.str() + " exceeds the " +
                             std::to_string(bit_cap) + "-bit cap");

  const BigNat n = in.n;
  const BigNat two_pow = BigNat(1) << in.nirreps_g.convert_to<unsigned>();
  return {n * in.t_g * in.order_prev_wreath,
          n * in.t_prev * in.order_g,
          n * n * n * two_pow * in.order_wreath};
}

FFTBoundTable fft_bound_chain(const RVector& r, bool paper_count,
                              std::uint64_t bit_cap)
{
  const ChainStats stats = chain_stats(r);
  FFTBoundTable table;
  BigNat t_g = 0, order_g = 1, nirreps_g = 1;
  for (const auto& level : stats.levels) {
    const std::uint32_t n = level.r_k;
    BigNat t_wreath = t_g;          // T(G wr S_1)
    BigNat order_wreath = order_g;  // |G wr S_1|
    BigNat order_before_last = 1;   // |G wr S_0|
    FFTStepTerms last{0, 0, 0};
    for (std::uint32_t m = 2; m <= n; ++m) {
      const BigNat next_order = order_wreath * order_g * m;
      last = fft_bound_terms(
        {m, t_g, order_g, t_wreath, order_wreath, nirreps_g, next_order}, bit_cap);
      order_before_last = order_wreath;
      t_wreath = last.total();
      order_wreath = next_order;
    }
    if (order_wreath != level.order)
      throw std::logic_error("fft chain order disagrees with group_order");

    table.levels.push_back({level.k, n, order_g,
                            order_before_last, nirreps_g,
                            t_wreath, order_wreath, order_wreath * order_wreath,
                            last});
    t_g = t_wreath;
    order_g = order_wreath;
    nirreps_g = paper_count ? level.irrep_count_paper : level.irrep_count;
  }
  return table;
}

}  // namespace wreath
