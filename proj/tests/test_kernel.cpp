#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hsk/kernel.hpp"
#include "hsk/spaces.hpp"
#include "hsk/typei.hpp"

using namespace hsk;

namespace {

SpaceParams cp1() { return space_from_label(parse_label("I(1,1)")); }
SpaceParams gr22() { return space_from_label(parse_label("I(2,2)")); }

RatPoly binom_basis_poly(long k) {
    // C(nu+k, k) = (nu+1)...(nu+k)/k!
    return RatPoly::rising_factorial(Rational(1), static_cast<unsigned long>(k)) *
           (Rational(1) / Rational(factorial(static_cast<unsigned long>(k))));
}

}  // namespace

TEST_CASE("szego coefficient polynomials") {
    CHECK(szego_coeff_poly(cp1(), 1) == RatPoly(std::vector<Rational>{1, 1}));
    CHECK(szego_coeff_poly(cp1(), 2) == RatPoly(std::vector<Rational>{1, 2}));

    RatPoly expect = RatPoly::rising_factorial(1, 2) * RatPoly::rising_factorial(2, 2) *
                     Rational(make_rat(1, 12));
    CHECK(szego_coeff_poly(gr22(), 1) == expect);
}

TEST_CASE("bergman coefficient polynomials") {
    CHECK(bergman_coeff_poly(cp1(), 1) == RatPoly::rising_factorial(1, 2));  // (nu+1)(nu+2)
    // (nu+1) * poch(2nu+2)_1 = 2(nu+1)^2
    CHECK(bergman_coeff_poly(cp1(), 2) == RatPoly(std::vector<Rational>{2, 4, 2}));
    // (nu+1) poch(nu+3)_2 / 12 = (nu+1)(nu+2)(nu+3)^2(nu+4)/12
    RatPoly expect = RatPoly(std::vector<Rational>{1, 1}) * RatPoly::rising_factorial(2, 2) *
                     RatPoly::rising_factorial(3, 2) * Rational(make_rat(1, 12));
    CHECK(bergman_coeff_poly(gr22(), 1) == expect);
}

TEST_CASE("binomial basis conversion") {
    CHECK(to_binomial_basis(RatPoly(std::vector<Rational>{1, 1})) == std::vector<Rational>{0, 1});
    CHECK(to_binomial_basis(RatPoly(std::vector<Rational>{1, 2})) == std::vector<Rational>{-1, 2});
    CHECK(to_binomial_basis(szego_coeff_poly(gr22(), 1)) ==
          std::vector<Rational>{0, 0, 0, -1, 2});
}

TEST_CASE("binomial basis round trip on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int deg = static_cast<int>(uniform01(rng) * 9.0) % 9;
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& q : c)
            q = make_rat(static_cast<long>(uniform01(rng) * 199.0) - 99,
                         1 + static_cast<long>(uniform01(rng) * 40.0) % 40);
        RatPoly P(c);
        auto d = to_binomial_basis(P);
        RatPoly back;
        for (std::size_t k = 0; k < d.size(); ++k)
            back += binom_basis_poly(static_cast<long>(k)) * d[k];
        CHECK(back == P);
    }
}

TEST_CASE("laurent profiles") {
    LaurentProfile a = laurent_profile({Rational(0), Rational(1)}, Prefactor::One);
    CHECK(a.coeffs == std::vector<Rational>{1, 0});  // K = rho^-2

    LaurentProfile b = laurent_profile({Rational(-1), Rational(2)}, Prefactor::One);
    CHECK(b.coeffs == std::vector<Rational>{2, 1});  // K = 2 rho^-2 + rho^-1

    LaurentProfile c = laurent_profile({0, 0, 0, Rational(-1), Rational(2)}, Prefactor::One);
    CHECK(c.coeffs == std::vector<Rational>{-2, -1, 0, 0, 0});  // K = -2 rho^-5 - rho^-4
    CHECK(c.depth() == 5);

    // worked evaluation at rho = t-1, t = 1/3
    CHECK(laurent_eval(c, make_rat(-2, 3)) == make_rat(81, 8));
}

TEST_CASE("c0 closed form") {
    KernelSpec s1{KernelKind::Szego, 1}, s2{KernelKind::Szego, 2}, b1{KernelKind::Bergman, 1};
    CHECK(c0_formula(cp1(), s1) == 1);
    CHECK(c0_formula(cp1(), s2) == 2);
    CHECK(c0_formula(gr22(), s1) == -2);
    CHECK(c0_formula(cp1(), b1) == -2);

    CHECK(check_c0(profile_for(cp1(), s1), cp1(), s1));
    CHECK(check_c0(profile_for(cp1(), s2), cp1(), s2));
    CHECK(check_c0(profile_for(gr22(), s1), gr22(), s1));
}

TEST_CASE("c0 and degree/leading across the catalog") {
    for (const auto& label : default_catalog()) {
        CAPTURE(label.str());
        const SpaceParams sp = space_from_label(label);
        const Rational norm = poch_value(sp.c0(), sp.s(), sp.r, sp.a);
        for (long mu = 1; mu <= 3; ++mu) {
            const Rational mu_n = pow_rational(Rational(mu), sp.n);
            RatPoly P = szego_coeff_poly(sp, mu);
            CHECK(P.degree() == sp.n);
            CHECK(P.evaluate(0) == 1);
            CHECK(P.leading() == mu_n / norm);
            RatPoly Q = bergman_coeff_poly(sp, mu);
            CHECK(Q.degree() == sp.n + 1);
            CHECK(Q.leading() == mu_n / norm);

            KernelSpec ks_s{KernelKind::Szego, mu}, ks_b{KernelKind::Bergman, mu};
            CHECK(check_c0(profile_for(sp, ks_s), sp, ks_s));
            CHECK(check_c0(profile_for(sp, ks_b), sp, ks_b));
        }
    }
}

TEST_CASE("rank-one dimension identity") {
    // For projective space I(1,m), the slice dimensions are C(nu+n, n).
    for (long m = 1; m <= 6; ++m) {
        SpaceParams sp = space_from_label({Family::I, 1, m});
        CHECK(szego_coeff_poly(sp, 1) == binom_basis_poly(sp.n));
    }
}

TEST_CASE("log term detector") {
    std::vector<Rational> linear;
    for (long v = 0; v <= 4; ++v) linear.push_back(v + 1);
    CHECK(log_term_detector(linear, 1));

    std::vector<Rational> geometric;
    for (long v = 0; v <= 4; ++v) geometric.push_back(pow_rational(2, v));
    CHECK_FALSE(log_term_detector(geometric, 1));

    RatPoly P = szego_coeff_poly(gr22(), 1);
    std::vector<Rational> quartic;
    for (long v = 0; v <= 6; ++v) quartic.push_back(P.evaluate(v));
    CHECK(log_term_detector(quartic, 4));

    CHECK_THROWS_AS(log_term_detector(linear, 4), std::invalid_argument);
}

TEST_CASE("series round trip against the Laurent profile, exact tail bound") {
    // Partial sums of sum_nu P_mu(nu) t^nu to nu = 200 agree with the profile
    // evaluated at rho = t-1 within the exact remainder bound
    //   sum_k |d_k| C(201+k, k) |t|^201 (1-|t|)^{-k-1},
    // which follows from C(a+b+k,k) <= C(a+k,k) C(b+k,k) termwise.
    const long N = 200;
    for (const auto& label : default_catalog()) {
        const SpaceParams sp = space_from_label(label);
        for (long mu = 1; mu <= 3; ++mu) {
            CAPTURE(label.str());
            CAPTURE(mu);
            RatPoly P = szego_coeff_poly(sp, mu);
            const auto d = to_binomial_basis(P);
            const LaurentProfile prof = laurent_profile(d, Prefactor::One);

            std::vector<Rational> values(static_cast<std::size_t>(N) + 1);
            for (long v = 0; v <= N; ++v) values[static_cast<std::size_t>(v)] = P.evaluate(v);

            for (long j = 1; j <= 10; ++j)
                for (int sign : {1, -1}) {
                    const Rational t = make_rat(sign * j, 43);
                    // Horner over the tabulated values
                    Rational partial(0);
                    for (long v = N; v >= 0; --v)
                        partial = partial * t + values[static_cast<std::size_t>(v)];
                    const Rational exact = laurent_eval(prof, t - 1);

                    Rational bound(0);
                    const Rational at(abs(t));
                    const Rational tailpow = pow_rational(at, N + 1);
                    for (std::size_t k = 0; k < d.size(); ++k) {
                        const Rational dk(abs(d[k]));
                        bound += dk *
                                 Rational(binomial(static_cast<unsigned long>(N + 1 + k),
                                                   static_cast<unsigned long>(k))) *
                                 tailpow * pow_rational(1 - at, -static_cast<long>(k) - 1);
                    }
                    const Rational err(abs(exact - partial));
                    CHECK(err <= bound);
                }
        }
    }
}
