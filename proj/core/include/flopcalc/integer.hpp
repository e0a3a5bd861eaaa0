#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flopcalc {

// Exact integer used for every dimension and multiplicity.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

// Binomial coefficient C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
Integer binomial(long long n, long long k);

}  // namespace flopcalc
