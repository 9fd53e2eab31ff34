// Arbitrary-precision integer support shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace horolamp {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

// Extended gcd: returns g = gcd(a, b) >= 0 and writes x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Binomial coefficient for n, k >= 0 (0 when k > n).
Int binomial(long long n, long long k);

}  // namespace horolamp
