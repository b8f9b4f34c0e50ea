#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hsk/rational.hpp"

namespace hsk {

/// Structure constants of an irreducible compact Hermitian symmetric space:
/// rank r, off-diagonal root multiplicity a, boundary multiplicity b, with the
/// derived complex dimension n and genus p.
struct SpaceParams {
    long r = 0;  ///< rank, >= 1
    long a = 0;  ///< off-diagonal multiplicity
    long b = 0;  ///< boundary multiplicity
    long n = 0;  ///< complex dimension: r + r(r-1)a/2 + rb
    long p = 0;  ///< genus: (r-1)a + 2 + b

    /// s = n/r (integer or half-integer; 2n/r is always an integer).
    Rational s() const { return make_rat(n, r); }
    /// The recurring offset p - n/r.
    Rational c0() const { return Rational(p) - s(); }

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

SpaceParams space_from_params(long r, long a, long b);

enum class Family { I, II, III, IV, EIII, EVII };

/// Classification label: I(k,m), II(m), III(m), IV(m), EIII, EVII.
struct SpaceLabel {
    Family family = Family::I;
    long k = 0;  // I only
    long m = 0;  // I, II, III, IV

    std::string str() const;
    friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;
};

SpaceParams space_from_label(const SpaceLabel& label);

/// Parse "I(2,4)", "III(3)", "IV(6)", "II(5)", "EIII", "EVII"
/// (case-insensitive, spaces ignored).  Throws std::invalid_argument.
SpaceLabel parse_label(std::string_view text);

/// Complex dimension of the family by its classical closed form
/// (k·m, m(m-1)/2, m(m+1)/2, m, 16, 27) — a cross-check on the r,a,b route.
long known_dimension(const SpaceLabel& label);

/// The desk-scale sweep: I(k,m) with k+m <= max_l, plus II/III/IV rows and
/// the two exceptional spaces, all capped at complex dimension 27.
std::vector<SpaceLabel> default_catalog(long max_l = 8);

std::string family_name(Family f);

}  // namespace hsk
