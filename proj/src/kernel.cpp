#include "hsk/kernel.hpp"

#include <stdexcept>

namespace hsk {

static Rational norm_constant(const SpaceParams& sp) {
    // poch(p - n/r)_{n/r}, the nu = 0 value of the raw numerator.
    return poch_value(sp.c0(), sp.s(), sp.r, sp.a);
}

RatPoly szego_coeff_poly(const SpaceParams& sp, long mu) {
    if (mu < 1) throw std::invalid_argument("szego_coeff_poly: mu must be >= 1");
    RatPoly raw = poch_polynomial(sp.r, sp.a, sp.s(), sp.c0());
    RatPoly composed = raw.scale_arg(Rational(mu));
    return composed * (Rational(1) / norm_constant(sp));
}

RatPoly bergman_coeff_poly(const SpaceParams& sp, long mu) {
    if (mu < 1) throw std::invalid_argument("bergman_coeff_poly: mu must be >= 1");
    RatPoly raw = poch_polynomial(sp.r, sp.a, sp.s(), sp.c0() + 1);
    RatPoly composed = raw.scale_arg(Rational(mu));
    RatPoly nu_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
    return nu_plus_1 * composed * (Rational(1) / norm_constant(sp));
}

RatPoly coeff_poly(const SpaceParams& sp, const KernelSpec& ks) {
    return ks.kind == KernelKind::Szego ? szego_coeff_poly(sp, ks.mu)
                                        : bergman_coeff_poly(sp, ks.mu);
}

std::vector<Rational> to_binomial_basis(const RatPoly& P) {
    // C(nu+k, k) is monic of degree k up to the 1/k! factor, so the change of
    // basis is triangular: peel from the top degree down.
    if (P.is_zero()) return {};
    const int deg = P.degree();
    std::vector<Rational> d(static_cast<std::size_t>(deg) + 1, Rational(0));
    RatPoly rem = P;
    for (int k = deg; k >= 0; --k) {
        if (rem.degree() < k) continue;
        Rational dk = rem.coeff(static_cast<std::size_t>(k)) * Rational(factorial(static_cast<unsigned long>(k)));
        d[static_cast<std::size_t>(k)] = dk;
        // subtract dk * C(nu+k, k) = dk/k! * (nu+1)...(nu+k)
        RatPoly basis = RatPoly::rising_factorial(Rational(1), static_cast<unsigned long>(k));
        rem -= basis * (dk / Rational(factorial(static_cast<unsigned long>(k))));
    }
    if (!rem.is_zero()) throw std::logic_error("to_binomial_basis: residual after back-substitution");
    return d;
}

LaurentProfile laurent_profile(const std::vector<Rational>& d, Prefactor pf) {
    LaurentProfile prof;
    prof.prefactor = pf;
    if (d.empty()) return prof;
    const std::size_t deg = d.size() - 1;
    prof.coeffs.resize(d.size());
    // sum_nu C(nu+k,k) t^nu = (1-t)^{-k-1} = (-1)^{k+1} rho^{-k-1} at rho = t-1
    for (std::size_t j = 0; j <= deg; ++j) {
        const std::size_t k = deg - j;
        prof.coeffs[j] = ((k % 2 == 0) ? Rational(-d[k]) : Rational(d[k]));
    }
    return prof;
}

LaurentProfile profile_for(const SpaceParams& sp, const KernelSpec& ks) {
    return laurent_profile(to_binomial_basis(coeff_poly(sp, ks)),
                           ks.kind == KernelKind::Bergman ? Prefactor::OneOverPi : Prefactor::One);
}

Rational c0_formula(const SpaceParams& sp, const KernelSpec& ks) {
    const long n = sp.n;
    Rational mu_n = pow_rational(Rational(ks.mu), n);
    if (ks.kind == KernelKind::Szego) {
        Rational v = Rational(factorial(static_cast<unsigned long>(n))) * mu_n / norm_constant(sp);
        return (n + 1) % 2 == 0 ? v : -v;
    }
    Rational v = Rational(factorial(static_cast<unsigned long>(n) + 1)) * mu_n / norm_constant(sp);
    return (n + 2) % 2 == 0 ? v : -v;
}

bool check_c0(const LaurentProfile& profile, const SpaceParams& sp, const KernelSpec& ks) {
    if (profile.coeffs.empty()) return false;
    return profile.coeffs[0] == c0_formula(sp, ks);
}

bool log_term_detector(const std::vector<Rational>& samples, long n) {
    if (n < 0) throw std::invalid_argument("log_term_detector: n must be >= 0");
    const std::size_t order = static_cast<std::size_t>(n) + 1;
    if (samples.size() < order + 1)
        throw std::invalid_argument("log_term_detector: need at least n+2 samples");
    std::vector<Rational> diff = samples;
    for (std::size_t pass = 0; pass < order; ++pass)
        for (std::size_t i = 0; i + 1 + pass < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    for (std::size_t i = 0; i + order < samples.size(); ++i)
        if (diff[i] != 0) return false;
    return true;
}

Rational laurent_eval(const LaurentProfile& profile, const Rational& rho) {
    if (rho == 0) throw std::domain_error("laurent_eval: rho = 0 is the singular locus");
    const long m1 = profile.depth();  // m+1
    Rational acc(0);
    // Horner in rho^{-1}: c_0 rho^{-m-1} + ... + c_m rho^{-1}
    Rational inv = 1 / rho;
    for (long j = 0; j < m1; ++j) acc = acc * inv + profile.coeffs[static_cast<std::size_t>(j)];
    return acc * inv;
}

}  // namespace hsk
