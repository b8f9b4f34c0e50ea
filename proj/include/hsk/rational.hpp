#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hsk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact n! as an arbitrary-precision integer.
inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Exact binomial coefficient C(n, k); zero for k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    if (k > n) return Integer(0);
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// Exact integer power of a rational.
inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0 to negative power");
        Rational inv = 1 / base;
        return pow_rational(inv, -e);
    }
    Rational acc(1), b(base);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= b;
        if (k >>= 1) b *= b;
    }
    return acc;
}

/// Canonicalized construction from a numerator/denominator pair (gmp's two-arg
/// constructor does not reduce the fraction itself).
inline Rational make_rat(long num, long den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// True iff q is an integer.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Floor of a rational as an integer.
inline Integer floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

/// Fractional part q - floor(q), in [0, 1).
inline Rational frac_part(const Rational& q) {
    return q - Rational(floor_rational(q));
}

/// Lossless decimal serialization: "7", "-3/4".
inline std::string rat_str(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parse "num", "num/den" (den > 0 after canonicalization).
inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hsk
