#pragma once

#include <string>
#include <vector>

#include "hsk/poly.hpp"

namespace hsk {

/// Gaussian binomial [l, k]_q, the Poincare polynomial of the Grassmannian of
/// k-planes in C^l in the variable q = t^2.  Computed by exact polynomial
/// division of (1-q^{l-k+1})...(1-q^l) by (1-q)...(1-q^k); the division must
/// come out exact (InexactDivision otherwise, which would be a bug, never a
/// rounding matter).  Degree k(l-k).
IntPoly gaussian_binomial(long l, long k);

/// One cohomology group in a lens-space table.
struct CohEntry {
    enum Kind { Z, Torsion, Zero } kind = Zero;
    long order = 0;  // m for Torsion entries

    std::string str() const;
    friend bool operator==(const CohEntry&, const CohEntry&) = default;
};

/// Integral cohomology of S^{2n+1}/Z_m:
///   H^0 = H^{2n+1} = Z,  H^{2j} = Z_m for j = 1..n,  0 otherwise
/// (for m = 1 the torsion entries collapse to 0 and the table is the sphere's).
struct CohomologyTable {
    long n = 0, m = 0;
    std::vector<CohEntry> entries;  // index j = 0 .. 2n+1

    CohEntry entry(long j) const;
};

CohomologyTable lens_cohomology(long n, long m);

/// Betti-number condition from the Gysin sequence of the circle bundle:
/// consecutive even Betti numbers agree, coefficient(j-1) == coefficient(j)
/// for j = 1..n — equivalently the Poincare polynomial is 1 + q + ... + q^n.
/// Throws std::invalid_argument when the polynomial degree is not n.
bool hh_condition(const IntPoly& poincare, long n);

/// Sweep verdict for the Grassmannian of k-planes in C^l.
struct LensVerdict {
    long k = 0, l = 0;
    long n = 0;         // complex dimension k(l-k)
    long real_dim = 0;  // of the circle bundle, 2n+1
    IntPoly poincare;
    bool lens_candidate = false;  // true iff the Betti condition holds
};

/// Computes gaussian_binomial(l,k), applies hh_condition; the candidate flag
/// comes out true exactly for k = 1 (projective spaces).
/// Requires 1 <= k <= l-k.
LensVerdict lens_obstruction(long k, long l);

}  // namespace hsk
