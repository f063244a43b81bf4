#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtem/errors.hpp"

namespace qtem {

// Exact arithmetic for the reference integrals: rationals over arbitrary
// precision integers, so no intermediate result ever rounds or overflows.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every finite double is m * 2^e with integer m, so the conversion is exact.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational_from_double: value is not finite");
    }
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double frac = std::frexp(x, &exp);
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    Rational r(mantissa);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace qtem
