#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chaingroup {

/// Arbitrary-precision natural number. Group orders are exact and are always
/// serialized as decimal strings.
using Natural = boost::multiprecision::cpp_int;

inline Natural factorial(int n) {
    Natural f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline Natural natural_pow(Natural base, int exp) {
    Natural r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

} // namespace chaingroup
