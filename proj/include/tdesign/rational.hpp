#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tdesign {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// binom(a, k) with the convention that it vanishes outside 0 <= k <= a
/// (in particular for negative a).
inline BigInt binomial(long long a, long long k) {
    if (k < 0 || a < k) return 0;
    BigInt result = 1;
    for (long long j = 1; j <= k; ++j) {
        result *= a - k + j;
        result /= j;
    }
    return result;
}

inline BigInt factorial(unsigned k) {
    BigInt result = 1;
    for (unsigned j = 2; j <= k; ++j) result *= j;
    return result;
}

inline Rational rational_pow(Rational base, long long e) {
    if (e < 0) {
        base = Rational(1) / base;
        e = -e;
    }
    Rational result = 1;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

/// x^k by binary exponentiation.  Unlike std::pow this is guaranteed
/// sign-symmetric: ipow(-x, k) == -ipow(x, k) bit for bit when k is odd,
/// which the antipodal cancellation checks rely on.
inline double ipow(double x, unsigned long long k) {
    double result = 1.0;
    while (k) {
        if (k & 1ULL) result *= x;
        x *= x;
        k >>= 1;
    }
    return result;
}

}  // namespace tdesign
