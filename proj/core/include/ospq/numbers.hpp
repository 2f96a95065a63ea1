#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace ospq {

// Exact rational arithmetic (GMP-backed) for all symbolic coefficients.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// High-precision numeric oracle type: 80 decimal digits, enough headroom for
// the 50-digit default evaluations with 10^-30 zero thresholds.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;

inline constexpr int kMaxEvalDigits = 75;   // Real carries 80 digits; leave margin.
inline constexpr int kDefaultDigits = 50;

} // namespace ospq
