#pragma once

#include <vector>

#include "hsk/poch.hpp"
#include "hsk/poly.hpp"
#include "hsk/spaces.hpp"

namespace hsk {

enum class KernelKind { Szego, Bergman };

/// Which kernel, on the disc bundle of the mu-th dual power of the generating
/// line bundle.
struct KernelSpec {
    KernelKind kind = KernelKind::Szego;
    long mu = 1;
};

enum class Prefactor { One, OneOverPi };

/// Finite Laurent data of a kernel in the defining function rho:
///   K = prefactor * sum_{j=0}^{m} coeffs[j] * rho^(j-m-1),
/// i.e. coeffs[0] multiplies the deepest pole rho^{-(m+1)}.  Explicit zero
/// entries are meaningful output and are retained.
struct LaurentProfile {
    std::vector<Rational> coeffs;
    Prefactor prefactor = Prefactor::One;

    /// Top singularity order m+1.
    long depth() const { return static_cast<long>(coeffs.size()); }
};

/// Szego coefficient polynomial
///   P_mu(nu) = poch(mu*nu + p - n/r)_{n/r} / poch(p - n/r)_{n/r};
/// P_mu(0) = 1, degree n, leading coefficient mu^n / poch(p-n/r)_{n/r}.
RatPoly szego_coeff_poly(const SpaceParams& sp, long mu);

/// Bergman coefficient polynomial (prefactor 1/pi carried separately):
///   Q_mu(nu) = (nu+1) * poch(mu*nu + 1 + p - n/r)_{n/r} / poch(p - n/r)_{n/r};
/// degree n+1.  The Pochhammer argument carries the +1 shift; the variant
/// without it predicts the wrong slice norms (see bergman_norm_quadrature),
/// so that reading is rejected by the oracle and noted in reports.
RatPoly bergman_coeff_poly(const SpaceParams& sp, long mu);

/// Exact coefficients d_0..d_deg with P(nu) = sum_k d_k * C(nu+k, k),
/// by back-substitution from the top degree.
std::vector<Rational> to_binomial_basis(const RatPoly& P);

/// Repackage binomial-basis coefficients as the Laurent profile:
/// sum_k d_k C(nu+k,k) t^nu = sum_k d_k (-1)^{k+1} rho^{-k-1} at rho = t-1,
/// reindexed to descending singularity order: c_j = (-1)^{deg-j+1} d_{deg-j}.
LaurentProfile laurent_profile(const std::vector<Rational>& d, Prefactor pf);

/// Closed form for the deepest Laurent coefficient:
///   Szego:   (-1)^{n+1} n!     mu^n / poch(p-n/r)_{n/r}
///   Bergman: (-1)^{n+2} (n+1)! mu^n / poch(p-n/r)_{n/r}
Rational c0_formula(const SpaceParams& sp, const KernelSpec& ks);

/// Exact equality of profile.coeffs[0] with c0_formula.
bool check_c0(const LaurentProfile& profile, const SpaceParams& sp, const KernelSpec& ks);

/// True iff the sample sequence is a polynomial of degree <= n: the (n+1)-th
/// forward differences vanish identically over all available windows.
/// Needs at least n+2 samples; throws std::invalid_argument otherwise.
bool log_term_detector(const std::vector<Rational>& samples, long n);

/// Evaluate sum_j coeffs[j] * rho^(j-m-1) exactly (prefactor not applied).
Rational laurent_eval(const LaurentProfile& profile, const Rational& rho);

/// Convenience: full pipeline coefficient polynomial for a kernel spec.
RatPoly coeff_poly(const SpaceParams& sp, const KernelSpec& ks);

/// Convenience: polynomial -> binomial basis -> profile.
LaurentProfile profile_for(const SpaceParams& sp, const KernelSpec& ks);

}  // namespace hsk
