#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gtv {

// Arbitrary-precision integers and exact rationals. Every count, rank, and
// dimension in this library is exact; nothing is ever computed in floating
// point. cpp_rational keeps values normalized (lowest terms, positive
// denominator), which the integrality assertions rely on.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the zero convention: C(a,b) for 0 <= b <= a,
// otherwise 0 (including negative arguments). The convention lets the
// piecewise cohomology formulas be evaluated unconditionally.
BigInt binom(long long a, long long b);

}  // namespace gtv
