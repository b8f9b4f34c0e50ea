#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "hsk/kernel.hpp"
#include "hsk/typei.hpp"

using namespace hsk;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

CMatrix scalar(Complex v) {
    CMatrix z(1, 1);
    z(0, 0) = v;
    return z;
}

}  // namespace

TEST_CASE("shape parameters") {
    SpaceParams sp = space_of_shape(2, 3);
    CHECK(sp.r == 2);
    CHECK(sp.a == 2);
    CHECK(sp.b == 1);
    CHECK(sp.n == 6);
    CHECK(sp.p == 5);
    CHECK(space_of_shape(3, 2) == sp);  // only the shape's min/|difference| matter
}

TEST_CASE("pairing function h") {
    CHECK(h_pair(scalar(0.5), scalar(0.5)) == Complex(1.25, 0.0));
    CMatrix z = CMatrix::Identity(2, 2) * Complex(0.5, 0.0);
    CHECK(h_pair(z, z).real() == doctest::Approx(1.5625).epsilon(1e-14));

    // sesqui-symmetry h(x,-y) = conj(h(y,-x)) and h(z,-z) >= 1
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const long k = 1 + static_cast<long>(uniform01(rng) * 3.0) % 3;
        const long m = 1 + static_cast<long>(uniform01(rng) * 3.0) % 3;
        CMatrix x = random_cmatrix(k, m, 0.6, rng);
        CMatrix y = random_cmatrix(k, m, 0.6, rng);
        const Complex hxy = h_pair(x, y), hyx = h_pair(y, x);
        CHECK(std::abs(hxy - std::conj(hyx)) < 1e-12);
        CHECK(h_pair(x, x).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(h_pair(x, x).real() >= 1.0);
    }
}

TEST_CASE("extended defining function") {
    CMatrix z0 = CMatrix::Zero(1, 1);
    CHECK(rho_ext(z0, Complex(0, 0), z0, Complex(0, 0), 1) == Complex(-1.0, 0.0));
    CHECK(rho_ext(z0, Complex(1, 0), z0, Complex(1, 0), 1) == Complex(0.0, 0.0));
    // k=m=1, x=y=1, alpha=beta=1/2: (1/4)*2 - 1 = -1/2
    CHECK(std::abs(rho_ext(scalar(Complex(1, 0)), Complex(0.5, 0.0), scalar(Complex(1, 0)),
                           Complex(0.5, 0.0), 1) -
                   Complex(-0.5, 0.0)) < 1e-15);
    // mu enters as the h-power: alpha*conj(beta)*h^mu - 1
    CMatrix x = scalar(Complex(0.3, 0.2));
    const Complex h = h_pair(x, x);
    const Complex got = rho_ext(x, Complex(0.4, 0.1), x, Complex(0.2, -0.5), 3);
    CHECK(std::abs(got - (Complex(0.4, 0.1) * std::conj(Complex(0.2, -0.5)) * h * h * h - 1.0)) <
          1e-15);
}

TEST_CASE("bergman operator determinant factorizes") {
    auto [big, factored] = bergman_op_det(scalar(0.5), scalar(0.5));
    CHECK(std::abs(big - Complex(9.0 / 16.0, 0.0)) < 1e-14);
    CHECK(std::abs(factored - Complex(9.0 / 16.0, 0.0)) < 1e-14);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const long k = 1 + static_cast<long>(uniform01(rng) * 3.0) % 3;
        const long m = 1 + static_cast<long>(uniform01(rng) * 3.0) % 3;
        CMatrix z = random_cmatrix(k, m, 0.5, rng);
        CMatrix w = random_cmatrix(k, m, 0.5, rng);
        auto [lhs, rhs] = bergman_op_det(z, w);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("hardy series sums the coefficient polynomials") {
    // projective line, t = 1/2: sum (nu+1) 2^-nu = 4
    CMatrix z0 = CMatrix::Zero(1, 1);
    Complex s = szego_series(z0, Complex(0.5, 0.0), z0, Complex(1.0, 0.0), 1, 1e-12);
    CHECK(std::abs(s - Complex(4.0, 0.0)) < 1e-10);

    // 2x2 shape, t = 1/3: the profile evaluation gives 81/8
    CMatrix z2 = CMatrix::Zero(2, 2);
    Complex s2 = szego_series(z2, Complex(1.0 / 3.0, 0.0), z2, Complex(1.0, 0.0), 1, 1e-12);
    CHECK(std::abs(s2 - Complex(81.0 / 8.0, 0.0)) < 1e-9);

    // same sum via the exact Laurent profile at rho = t - 1
    SpaceParams sp = space_of_shape(2, 2);
    LaurentProfile prof = profile_for(sp, KernelSpec{KernelKind::Szego, 1});
    CHECK(to_double(laurent_eval(prof, make_rat(-2, 3))) == doctest::Approx(81.0 / 8.0));

    // an off-diagonal complex point, checked against the profile
    std::mt19937_64 rng(7);
    CMatrix x = random_cmatrix(2, 2, 0.35, rng);
    CMatrix y = random_cmatrix(2, 2, 0.35, rng);
    const Complex alpha(0.4, 0.2), beta(0.5, -0.3);
    const Complex t = alpha * std::conj(beta) * h_pair(x, y);
    REQUIRE(std::abs(t) < 0.9);
    const Complex got = szego_series(x, alpha, y, beta, 1, 1e-12);
    // evaluate the profile at rho = t-1 in doubles
    Complex want(0.0, 0.0);
    const Complex inv = 1.0 / (t - 1.0);
    for (const auto& c : prof.coeffs) want = want * inv + Complex(to_double(c), 0.0);
    want *= inv;
    CHECK(std::abs(got - want) < 1e-9 * std::abs(want));
}

TEST_CASE("mobius action") {
    CMatrix z = scalar(Complex(0.2, -0.1));

    // identity acts trivially
    CHECK(std::abs(mobius_action(CMatrix::Identity(2, 2), 1, z)(0, 0) - z(0, 0)) < 1e-15);

    // the inversion [0 1; -1 0] has its pole at z = 0
    CMatrix u(2, 2);
    u << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
    CHECK_THROWS_AS(mobius_action(u, 1, CMatrix::Zero(1, 1)), std::domain_error);
    // elsewhere it is z |-> 1/(-z) ... action (0*z+1)(-z+0)^{-1} = -1/z
    CMatrix img = mobius_action(u, 1, z);
    CHECK(std::abs(img(0, 0) - (-1.0 / z(0, 0))) < 1e-14);

    // composition law g1(g2 z) = (g1 g2) z, rank 1 and rank 2
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const long k = (trial % 2) ? 2 : 1;
        const long m = (trial % 3) ? 2 : 3;
        CMatrix g1 = random_unitary(k + m, rng);
        CMatrix g2 = random_unitary(k + m, rng);
        CMatrix pt = random_cmatrix(k, m, 0.4, rng);
        CMatrix lhs = mobius_action(g1, k, mobius_action(g2, k, pt));
        CMatrix rhs = mobius_action(g1 * g2, k, pt);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("numeric jacobian of a rotation") {
    const double theta = 0.7;
    CMatrix u(2, 2);
    u << std::polar(1.0, theta), Complex(0, 0), Complex(0, 0), std::polar(1.0, -theta);
    CMatrix z = scalar(Complex(0.3, 0.1));
    const Complex J = jacobian_det_numeric(u, 1, z);
    CHECK(std::abs(J - std::polar(1.0, 2.0 * theta)) < 1e-9);
}

TEST_CASE("transformation rule h(gz,-gz) = h(z,-z) |J|^(2/p)") {
    std::mt19937_64 rng(42);
    CMatrix g = random_unitary(2, rng);
    CHECK(transformation_residual(g, 1, scalar(Complex(0.3, 0.4))) < 1e-6);
    CHECK(transformation_check(g, 1, scalar(Complex(-0.2, 0.25)), 1e-5));

    for (int trial = 0; trial < 6; ++trial) {
        const long k = (trial % 2) ? 2 : 1;
        const long m = 2;
        CMatrix u = random_unitary(k + m, rng);
        CMatrix z = random_cmatrix(k, m, 0.3, rng);
        CAPTURE(trial);
        CHECK(transformation_residual(u, k, z) < 1e-5);
    }
}

TEST_CASE("bundle point interiority") {
    BundlePoint in{CMatrix::Zero(1, 1), Complex(0.5, 0.0), 1};
    CHECK(in.is_interior());
    BundlePoint on{CMatrix::Zero(1, 1), Complex(1.0, 0.0), 1};
    CHECK_FALSE(on.is_interior());
}

TEST_CASE("monge-ampere determinant on the circle bundle") {
    struct Case {
        long k, m, mu;
    };
    const Case cases[] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 3}, {2, 2, 1}, {2, 2, 4}};
    std::mt19937_64 rng(42);
    for (const auto& cs : cases) {
        CAPTURE(cs.k);
        CAPTURE(cs.m);
        CAPTURE(cs.mu);
        const SpaceParams sp = space_of_shape(cs.k, cs.m);
        CMatrix z = random_cmatrix(cs.k, cs.m, 0.3, rng);
        const double h = h_pair(z, z).real();
        // lambda on the circle bundle |lambda|^2 h^mu = 1, with a nontrivial phase
        const Complex lambda = std::polar(std::pow(h, -0.5 * cs.mu), 0.3);
        BundlePoint pt{z, lambda, cs.mu};
        const double want =
            std::pow(static_cast<double>(cs.mu), static_cast<double>(sp.n)) *
            std::pow(h, static_cast<double>(cs.mu - sp.p));
        const double got = monge_ampere_richardson(pt, 1e-2);
        CHECK(rel_err(got, want) < 1e-6);
    }

    // mu = p makes the target h-independent: mu^n exactly
    {
        CMatrix z = random_cmatrix(2, 2, 0.25, rng);
        const double h = h_pair(z, z).real();
        BundlePoint pt{z, std::polar(std::pow(h, -2.0), -1.1), 4};
        CHECK(rel_err(monge_ampere_richardson(pt, 1e-2), 256.0) < 1e-6);
    }

    // off the boundary the value scales by (|lambda|^2 h^mu)^n
    {
        CMatrix z = scalar(Complex(0.3, -0.2));
        const double h = h_pair(z, z).real();
        const double scale = 0.7;  // |lambda|^2 h^mu
        BundlePoint pt{z, std::polar(std::sqrt(scale / h), 0.4), 1};
        const double want = 1.0 * std::pow(h, -1.0) * scale;  // n = 1
        CHECK(rel_err(monge_ampere_richardson(pt, 1e-2), want) < 1e-6);
    }
}

TEST_CASE("gauss-legendre rule on (0,1)") {
    auto rule = gauss_legendre(5);
    REQUIRE(rule.size() == 5);
    double wsum = 0.0, m9 = 0.0;
    for (auto [x, w] : rule) {
        wsum += w;
        m9 += w * std::pow(x, 9);
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m9 == doctest::Approx(0.1).epsilon(1e-13));  // exact for degree <= 9
    for (std::size_t i = 0; i < rule.size(); ++i)
        CHECK(rule[i].first + rule[rule.size() - 1 - i].first == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hardy slice norms by quadrature") {
    CHECK(rel_err(hardy_norm_quadrature(space_of_shape(1, 1), 3, 40), 0.25) < 1e-8);
    CHECK(rel_err(hardy_norm_quadrature(space_of_shape(1, 2), 1, 40), 1.0 / 3.0) < 1e-8);
    CHECK(rel_err(hardy_norm_quadrature(space_of_shape(2, 2), 1, 40), 1.0 / 6.0) < 1e-5);

    // against the exact Pochhammer ratio over a nu-range
    for (long nu = 0; nu <= 6; ++nu) {
        const SpaceParams sp = space_of_shape(1, 2);
        const Rational want = poch_value(sp.c0(), sp.s(), sp.r, sp.a) /
                              poch_value(sp.c0() + nu, sp.s(), sp.r, sp.a);
        CHECK(rel_err(hardy_norm_quadrature(sp, nu, 48), to_double(want)) < 1e-8);
    }
}

TEST_CASE("bergman slice norms separate the shifted variant") {
    CHECK(rel_err(bergman_norm_quadrature(0), M_PI / 2.0) < 1e-8);
    CHECK(rel_err(bergman_norm_quadrature(1), M_PI / 6.0) < 1e-8);
    CHECK(rel_err(bergman_norm_quadrature(2), M_PI / 12.0) < 1e-8);
    // the unshifted reading would predict pi/(nu+1)^2 = pi/4 at nu = 1
    CHECK(rel_err(bergman_norm_quadrature(1), M_PI / 4.0) > 0.1);
}

TEST_CASE("deterministic sampling") {
    std::mt19937_64 a(123), b(123), c(124);
    bool all_same = true, any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const double ua = uniform01(a), ub = uniform01(b), uc = uniform01(c);
        CHECK(ua >= 0.0);
        CHECK(ua < 1.0);
        all_same = all_same && (ua == ub);
        any_diff = any_diff || (ua != uc);
    }
    CHECK(all_same);
    CHECK(any_diff);

    std::mt19937_64 rng(9);
    CMatrix u = random_unitary(3, rng);
    CHECK((u.adjoint() * u - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
}
