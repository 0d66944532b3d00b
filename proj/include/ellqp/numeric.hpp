#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ellqp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Decision could not be made at the working precision; callers may retry
/// at doubled precision before giving up.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// All coordinates of an element are below precision, so its valuation is unknown.
struct indeterminate_valuation : precision_error {
    explicit indeterminate_valuation(const std::string& what) : precision_error(what) {}
};

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

inline Int pow_int(const Int& b, long e) {
    Int r = 1, x = b;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= x;
        if (k > 1) x *= x;
    }
    return r;
}

inline long valuation_int(Int n, long p) {
    if (n == 0) throw division_by_zero("valuation of 0");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a modulo m (gcd(a, m) = 1).
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_pos(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_pos(s0, m);
}

inline long lcm_long(long a, long b) {
    long g = std::gcd(a, b);
    return a / g * b;
}

}  // namespace ellqp
