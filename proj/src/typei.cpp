#include "hsk/typei.hpp"

#include <cmath>
#include <stdexcept>

#include "hsk/kernel.hpp"

namespace hsk {

namespace {

Complex cpow_int(Complex base, long e) {
    if (e < 0) return 1.0 / cpow_int(base, -e);
    Complex acc(1.0, 0.0), b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

double dpow_int(double base, long e) {
    double acc = 1.0, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

void check_same_shape(const CMatrix& x, const CMatrix& y, const char* who) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

}  // namespace

SpaceParams space_of_shape(long k, long m) {
    if (k < 1 || m < 1) throw std::invalid_argument("space_of_shape: need k, m >= 1");
    return space_from_params(std::min(k, m), 2, std::labs(m - k));
}

Complex h_pair(const CMatrix& x, const CMatrix& y) {
    check_same_shape(x, y, "h_pair");
    const long k = x.rows();
    CMatrix g = CMatrix::Identity(k, k) + x * y.adjoint();
    return g.determinant();
}

std::pair<Complex, Complex> bergman_op_det(const CMatrix& z, const CMatrix& w) {
    check_same_shape(z, w, "bergman_op_det");
    const long k = z.rows(), m = z.cols();
    CMatrix a = CMatrix::Identity(k, k) - z * w.adjoint();   // acts on the left
    CMatrix b = CMatrix::Identity(m, m) - w.adjoint() * z;   // acts on the right
    if (std::abs(a.determinant()) < 1e-14)
        throw std::domain_error("bergman_op_det: I - z w* is singular");
    // matrix of x |-> a x b in the row-major flattening: M[(i,j),(i2,j2)] = a(i,i2) b(j2,j)
    CMatrix big(k * m, k * m);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < m; ++j)
            for (long i2 = 0; i2 < k; ++i2)
                for (long j2 = 0; j2 < m; ++j2) big(i * m + j, i2 * m + j2) = a(i, i2) * b(j2, j);
    return {big.determinant(), cpow_int(a.determinant(), k + m)};
}

Complex rho_ext(const CMatrix& x, Complex alpha, const CMatrix& y, Complex beta, long mu) {
    return alpha * std::conj(beta) * cpow_int(h_pair(x, y), mu) - 1.0;
}

bool BundlePoint::is_interior() const {
    return std::norm(lambda) * dpow_int(h_pair(z, z).real(), mu) < 1.0;
}

Complex szego_series(const CMatrix& x, Complex alpha, const CMatrix& y, Complex beta, long mu,
                     double tol) {
    SpaceParams sp = space_of_shape(x.rows(), x.cols());
    const Complex t = alpha * std::conj(beta) * cpow_int(h_pair(x, y), mu);
    const double at = std::abs(t);
    if (at > 0.9) throw std::domain_error("szego_series: |t| > 0.9, too close to the boundary");

    RatPoly P = szego_coeff_poly(sp, mu);
    std::vector<double> cf(P.coeffs().size());
    for (std::size_t i = 0; i < cf.size(); ++i) cf[i] = to_double(P.coeff(i));
    auto evalP = [&cf](double v) {
        double acc = 0.0;
        for (std::size_t i = cf.size(); i-- > 0;) acc = acc * v + cf[i];
        return acc;
    };

    Complex sum(0.0, 0.0), tp(1.0, 0.0);
    double atp = 1.0;  // |t|^nu
    for (long nu = 0;; ++nu) {
        sum += evalP(static_cast<double>(nu)) * tp;
        tp *= t;
        atp *= at;
        // All roots of P are negative real, so P(nu+1)/P(nu) decreases in nu;
        // once q = |t| P(nu+2)/P(nu+1) < 1 the tail is dominated by the
        // geometric series a1 * (1 + q + q^2 + ...).
        const double a1 = evalP(static_cast<double>(nu + 1)) * atp;
        const double q = at * evalP(static_cast<double>(nu + 2)) / evalP(static_cast<double>(nu + 1));
        if (q < 1.0 && a1 / (1.0 - q) < tol) break;
        if (nu > 200000) throw std::runtime_error("szego_series: tolerance not reached");
    }
    return sum;
}

CMatrix mobius_action(const CMatrix& u, long k, const CMatrix& z) {
    const long l = u.rows();
    if (u.cols() != l || k < 1 || k >= l) throw std::invalid_argument("mobius_action: bad block split");
    const long m = l - k;
    if (z.rows() != k || z.cols() != m) throw std::invalid_argument("mobius_action: z must be k x (l-k)");
    CMatrix A = u.topLeftCorner(k, k), B = u.topRightCorner(k, m);
    CMatrix C = u.bottomLeftCorner(m, k), D = u.bottomRightCorner(m, m);
    CMatrix S = C * z + D;
    if (std::abs(S.determinant()) < 1e-12)
        throw std::domain_error("mobius_action: C z + D singular (chart boundary)");
    return (A * z + B) * S.inverse();
}

Complex jacobian_det_numeric(const CMatrix& u, long k, const CMatrix& z, double step) {
    const long m = z.cols(), n = k * m;
    CMatrix J(n, n);
    for (long i2 = 0; i2 < k; ++i2)
        for (long j2 = 0; j2 < m; ++j2) {
            CMatrix zp = z, zm = z;
            zp(i2, j2) += step;
            zm(i2, j2) -= step;
            CMatrix g = (mobius_action(u, k, zp) - mobius_action(u, k, zm)) / (2.0 * step);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < m; ++j) J(i * m + j, i2 * m + j2) = g(i, j);
        }
    return J.determinant();
}

double transformation_residual(const CMatrix& u, long k, const CMatrix& z, double step) {
    const long p = u.rows();  // genus of the k-plane Grassmannian in C^l is l
    const double lhs = h_pair(mobius_action(u, k, z), mobius_action(u, k, z)).real();
    const Complex J = jacobian_det_numeric(u, k, z, step);
    const double rhs = h_pair(z, z).real() * std::pow(std::abs(J), 2.0 / static_cast<double>(p));
    return std::abs(lhs - rhs) / std::abs(rhs);
}

bool transformation_check(const CMatrix& u, long k, const CMatrix& z, double tol) {
    return transformation_residual(u, k, z) <= tol;
}

namespace {

using CoordVec = std::vector<Complex>;

// Wirtinger derivatives by central differences: d/dw = (d/dx - i d/dy)/2,
// d/dconj(w) = (d/dx + i d/dy)/2.
template <typename F>
Complex d_holo(const F& f, const CoordVec& w, std::size_t i, double h) {
    CoordVec a = w, b = w;
    a[i] += h;
    b[i] -= h;
    Complex dx = (f(a) - f(b)) / (2.0 * h);
    a = w;
    b = w;
    a[i] += Complex(0.0, h);
    b[i] -= Complex(0.0, h);
    Complex dy = (f(a) - f(b)) / (2.0 * h);
    return 0.5 * (dx - Complex(0.0, 1.0) * dy);
}

template <typename F>
Complex d_anti(const F& f, const CoordVec& w, std::size_t i, double h) {
    CoordVec a = w, b = w;
    a[i] += h;
    b[i] -= h;
    Complex dx = (f(a) - f(b)) / (2.0 * h);
    a = w;
    b = w;
    a[i] += Complex(0.0, h);
    b[i] -= Complex(0.0, h);
    Complex dy = (f(a) - f(b)) / (2.0 * h);
    return 0.5 * (dx + Complex(0.0, 1.0) * dy);
}

}  // namespace

double monge_ampere_numeric(const BundlePoint& pt, double step) {
    const long k = pt.z.rows(), m = pt.z.cols(), n = k * m, mu = pt.mu;
    CoordVec w0(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < m; ++j) w0[static_cast<std::size_t>(i * m + j)] = pt.z(i, j);
    w0.back() = pt.lambda;

    auto rho = [k, m, mu](const CoordVec& w) -> Complex {
        CMatrix z(k, m);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < m; ++j) z(i, j) = w[static_cast<std::size_t>(i * m + j)];
        const double h = h_pair(z, z).real();
        return Complex(std::norm(w.back()) * dpow_int(h, mu) - 1.0, 0.0);
    };

    const std::size_t nc = static_cast<std::size_t>(n) + 1;  // holomorphic coordinates
    CMatrix M(n + 2, n + 2);
    M(0, 0) = rho(w0);
    for (std::size_t j = 0; j < nc; ++j) M(0, 1 + static_cast<long>(j)) = d_holo(rho, w0, j, step);
    for (std::size_t i = 0; i < nc; ++i) {
        M(1 + static_cast<long>(i), 0) = d_anti(rho, w0, i, step);
        for (std::size_t j = 0; j < nc; ++j) {
            auto inner = [&rho, i, step](const CoordVec& w) { return d_anti(rho, w, i, step); };
            M(1 + static_cast<long>(i), 1 + static_cast<long>(j)) = d_holo(inner, w0, j, step);
        }
    }
    return -M.determinant().real();
}

double monge_ampere_richardson(const BundlePoint& pt, double step) {
    const double j1 = monge_ampere_numeric(pt, step);
    const double j2 = monge_ampere_numeric(pt, step / 2.0);
    return (4.0 * j2 - j1) / 3.0;  // central differences carry O(h^2) error
}

std::vector<std::pair<double, double>> gauss_legendre(long n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    std::vector<std::pair<double, double>> nw(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (long i = 0; i < n; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence up to degree n
            double p0 = 1.0, p1 = x;
            for (long d = 2; d <= n; ++d) {
                double p2 = ((2.0 * d - 1.0) * x * p1 - (d - 1.0) * p0) / static_cast<double>(d);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // map (-1,1) -> (0,1)
        nw[static_cast<std::size_t>(i)] = {0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * dp * dp)};
    }
    return nw;
}

double hardy_norm_quadrature(const SpaceParams& sp, long nu, long grid) {
    if (sp.r != 1 && sp.r != 2)
        throw std::invalid_argument("hardy_norm_quadrature: rank > 2 unsupported (dimension blow-up)");
    if (nu < 0) throw std::invalid_argument("hardy_norm_quadrature: nu must be >= 0");
    auto nw = gauss_legendre(grid);
    auto slice = [&](long expo) {
        if (sp.r == 1) {
            double acc = 0.0;
            for (auto [x, w] : nw) acc += w * dpow_int(x, sp.b) * dpow_int(1.0 - x, expo);
            return 0.5 * acc;
        }
        double acc = 0.0;
        for (auto [x1, w1] : nw) {
            const double f1 = dpow_int(x1, sp.b) * dpow_int(1.0 - x1, expo);
            for (auto [x2, w2] : nw)
                acc += w1 * w2 * f1 * dpow_int(x2, sp.b) * dpow_int(1.0 - x2, expo) *
                       dpow_int(std::abs(x1 - x2), sp.a);
        }
        return 0.25 * acc;
    };
    return slice(nu) / slice(0);
}

double bergman_norm_quadrature(long nu) {
    if (nu < 0) throw std::invalid_argument("bergman_norm_quadrature: nu must be >= 0");
    const SpaceParams cp1 = space_of_shape(1, 1);
    const double pi = std::acos(-1.0);
    return pi / (static_cast<double>(nu) + 1.0) * hardy_norm_quadrature(cp1, nu + 1, 200);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal01(std::mt19937_64& rng) {
    double u1 = uniform01(rng), u2 = uniform01(rng);
    while (u1 <= 1e-300) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

CMatrix random_cmatrix(long k, long m, double amp, std::mt19937_64& rng) {
    CMatrix z(k, m);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < m; ++j) {
            double re = amp * (2.0 * uniform01(rng) - 1.0);
            double im = amp * (2.0 * uniform01(rng) - 1.0);
            z(i, j) = Complex(re, im);
        }
    return z;
}

CMatrix random_unitary(long l, std::mt19937_64& rng) {
    CMatrix g(l, l);
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) g(i, j) = Complex(normal01(rng), normal01(rng));
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long c = 0; c < l; ++c) {
        Complex d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace hsk
