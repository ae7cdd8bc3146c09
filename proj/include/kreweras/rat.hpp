#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace kreweras {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

/// Set the working mpfr precision (thread-local) from a bit count.
inline void set_float_precision_bits(unsigned bits) {
    BigFloat::default_precision(static_cast<unsigned>(bits * 0.30103) + 3);
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    Int kk = k <= n - k ? k : n - k;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at each step
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(const Int& b, unsigned e) {
    Int r = 1, x = b;
    for (; e; e >>= 1) {
        if (e & 1) r *= x;
        if (e > 1) x *= x;
    }
    return r;
}

inline Rat rat_pow(const Rat& b, int e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
        return rat_pow(Rat(1) / b, -e);
    }
    Rat r = 1, x = b;
    for (unsigned u = static_cast<unsigned>(e); u; u >>= 1) {
        if (u & 1) r *= x;
        if (u > 1) x *= x;
    }
    return r;
}

/// Exact square root of a rational, if it is a perfect square of a rational.
inline bool rat_sqrt(const Rat& a, Rat& out) {
    if (a < 0) return false;
    if (a == 0) { out = 0; return true; }
    Int num = numerator(a), den = denominator(a);
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    out = Rat(sn, sd);
    return true;
}

/// Parse "a/b" or "a" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& a) {
    std::string s = numerator(a).str();
    if (denominator(a) != 1) s += "/" + denominator(a).str();
    return s;
}

}  // namespace kreweras
