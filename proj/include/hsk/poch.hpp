#pragma once

#include <stdexcept>

#include "hsk/poly.hpp"
#include "hsk/rational.hpp"

namespace hsk {

/// Raised when Gamma_M(c+s)/Gamma_M(c) is not a polynomial in c, i.e. the
/// numerator/denominator Gamma arguments cannot be paired with non-negative
/// integer gaps within each offset-mod-1 class.
struct NonPolynomialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when some Gamma argument c - (a/2)(j-1) is <= 0.
struct GammaPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// log Gamma_M(c) = sum_{j=1}^r log Gamma(c - (a/2)(j-1)) for the Gindikin
/// Gamma function.  Numeric-oracle use only; the exact pipeline never calls it.
double gindikin_log_gamma(double c, long r, long a);

/// The generalized Pochhammer symbol as an exact polynomial:
///   P(nu) = poch(nu + c0)_s = Gamma_M(nu + c0 + s) / Gamma_M(nu + c0).
///
/// Construction: collect numerator arguments {nu + c0 + s - (a/2)(j-1)} and
/// denominator arguments {nu + c0 - (a/2)(j-1)}, j = 1..r; split both sides by
/// offset mod 1; inside each class sort ascending and pair positionally.  Every
/// pair must differ by a non-negative integer g, and contributes the rising
/// factorial prod_{i=0}^{g-1}(nu + den_offset + i).  The product over all pairs
/// is the result — monic of degree r*s whenever r*s is an integer.
/// Throws NonPolynomialError when any class fails to pair.
RatPoly poch_polynomial(long r, long a, const Rational& s, const Rational& c0);

/// poch(c)_s = Gamma_M(c+s)/Gamma_M(c) as an exact rational, via the
/// polynomial route evaluated at nu = 0.  Throws NonPolynomialError when no
/// polynomial route exists (callers then fall back to poch_numeric).
Rational poch_value(const Rational& c, const Rational& s, long r, long a);

/// Floating-point fallback: exp(log Gamma_M(c+s) - log Gamma_M(c)).
double poch_numeric(double c, double s, long r, long a);

}  // namespace hsk
