#include "wreath/bignat.hpp"

#include <cstdio>

namespace wreath {

namespace {

BigNat pow10(std::int64_t e)
{
  BigNat out = 1;
  for (std::int64_t i = 0; i < e; ++i)
    out *= 10;
  return out;
}

std::int64_t decimal_digits(const BigNat& n) { return static_cast<std::int64_t>(n.str().size()); }

}  // namespace

std::string approx_decimal(const BigRational& q)
{
  BigNat num = boost::multiprecision::numerator(q);
  const BigNat den = boost::multiprecision::denominator(q);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  if (num == 0)
    return "0.00000e+00";

  // Find e with 10^5 <= round(num * 10^(5-e) / den) < 10^6.
  std::int64_t e = decimal_digits(num) - decimal_digits(den);
  BigNat scaled;
  for (;;) {
    const std::int64_t shift = 5 - e;
    BigNat n = num, d = den;
    if (shift >= 0)
      n *= pow10(shift);
    else
      d *= pow10(-shift);
    scaled = (2 * n + d) / (2 * d);
    if (scaled >= 1000000)
      ++e;
    else if (scaled < 100000)
      --e;
    else
      break;
  }
  const std::string digits = scaled.str();
  char exponent[32];
  std::snprintf(exponent, sizeof exponent, "e%c%02lld", e < 0 ? '-' : '+',
                static_cast<long long>(e < 0 ? -e : e));
  return sign + digits.substr(0, 1) + "." + digits.substr(1) + exponent;
}

}  // namespace wreath
