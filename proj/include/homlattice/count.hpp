#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace homlattice {

// Exact counts and coefficients. Homomorphism counts overflow 64 bits fast.
using Count = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace homlattice
