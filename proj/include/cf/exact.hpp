#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Combinatorial convention: 0 whenever k < 0, n < 0 or k > n, so that
// aggregate sums over k need no special casing.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // divides exactly at every step
    }
    return r;
}

// Division that must be exact; a remainder is a hard failure.
inline Int exact_div(const Int& num, long long den, const char* what) {
    if (den == 0) throw std::domain_error(std::string(what) + ": denominator is zero");
    Int q = num / den;
    if (q * den != num)
        throw std::domain_error(std::string(what) + ": division by " + std::to_string(den) +
                                " leaves a remainder");
    return q;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Rational -> integer, asserting integrality (series coefficients that
// represent counts must come out integral).
inline Int to_integer(const Rat& q, const char* what) {
    if (denominator(q) != 1)
        throw std::domain_error(std::string(what) + ": value " + q.str() + " is not an integer");
    return numerator(q);
}

}  // namespace cf
