#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fll {

// Exact arbitrary-precision arithmetic for counts and expectations. Every
// expectation this library computes is a rational with denominator dividing
// q^n; equality checks are exact, never within-epsilon.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace fll
