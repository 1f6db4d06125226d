#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

// Exact integers for orders, counts, dimensions and costs. Values handled by
// the library are never negative.
using BigNat = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigNat& n) { return n.str(); }

inline std::string to_string(const BigRational& q)
{
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline BigNat factorial(std::uint64_t n)
{
  BigNat out = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    out *= i;
  return out;
}

inline BigNat pow(const BigNat& base, std::uint64_t e)
{
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// Six significant digits in scientific notation, rounded half up, computed
// from the exact fraction (e.g. "1.60000e+01").
std::string approx_decimal(const BigRational& q);

}  // namespace wreath
