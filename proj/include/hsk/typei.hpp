#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "hsk/spaces.hpp"

namespace hsk {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Structure constants of the Grassmannian of k-planes realized by k x m
/// matrix coordinates: (r, a, b) = (min(k,m), 2, |m-k|).
SpaceParams space_of_shape(long k, long m);

/// h(x, -y) := det(I_k + x y*).  On the diagonal h(z, -z) = det(I + z z*) >= 1.
Complex h_pair(const CMatrix& x, const CMatrix& y);

/// The determinant of the Bergman operator x |-> (I - z w*) x (I - w* z) as a
/// (km)x(km) linear map, paired with det(I - z w*)^{k+m}.  The two agree
/// identically (Kronecker factorization plus the Sylvester determinant
/// identity); returning both keeps the cross-check observable.
std::pair<Complex, Complex> bergman_op_det(const CMatrix& z, const CMatrix& w);

/// Sesqui-holomorphic extension of the defining function:
/// rho(x,alpha; y,beta) = alpha * conj(beta) * h(x,-y)^mu - 1.
Complex rho_ext(const CMatrix& x, Complex alpha, const CMatrix& y, Complex beta, long mu);

/// A point of the total space of the mu-th dual power disc bundle in the
/// coordinates (z, lambda).
struct BundlePoint {
    CMatrix z;
    Complex lambda{0.0, 0.0};
    long mu = 1;

    /// |lambda|^2 h(z,-z)^mu < 1
    bool is_interior() const;
};

/// Hardy-space kernel sum K = sum_nu P_mu(nu) t^nu at t = alpha conj(beta)
/// h(x,-y)^mu, summed adaptively until the geometric tail bound drops below
/// tol (absolute).  The bound is rigorous: the coefficient ratio
/// P(nu+1)/P(nu) decreases in nu because every root of P is negative real.
/// Requires |t| <= 0.9.
Complex szego_series(const CMatrix& x, Complex alpha, const CMatrix& y, Complex beta, long mu,
                     double tol);

/// Fractional-linear action of a block matrix u = [A B; C D] (A is k x k) on
/// k x (l-k) coordinates: z |-> (A z + B)(C z + D)^{-1}.
/// Throws std::domain_error when C z + D is singular (the point leaves the chart).
CMatrix mobius_action(const CMatrix& u, long k, const CMatrix& z);

/// Determinant of the n x n holomorphic Jacobian of z |-> mobius_action(u, z),
/// entries by central differences with step `step` in each matrix coordinate.
Complex jacobian_det_numeric(const CMatrix& u, long k, const CMatrix& z, double step = 1e-5);

/// Relative defect of h(gz,-gz) = h(z,-z) |J_g(z)|^{2/p} with p = k + m.
double transformation_residual(const CMatrix& u, long k, const CMatrix& z, double step = 1e-5);
bool transformation_check(const CMatrix& u, long k, const CMatrix& z, double tol);

/// Monge-Ampere determinant of rho(z, lambda) = |lambda|^2 h(z,-z)^mu - 1:
/// assembles the bordered (n+2)x(n+2) matrix
///   [ rho            d rho / d w_j     ]
///   [ d rho / d conj(w_i)   d^2 rho / d w_j d conj(w_i) ]
/// over the n+1 holomorphic coordinates w = (z_11..z_km, lambda) with nested
/// central Wirtinger differences, and returns J[rho] = -det.  On the circle
/// bundle |lambda|^2 h^mu = 1 this equals mu^n h(z,-z)^{mu-p}; off the
/// boundary the value scales by (|lambda|^2 h^mu)^n.
double monge_ampere_numeric(const BundlePoint& pt, double step);

/// Two-step Richardson refinement (steps h and h/2) of monge_ampere_numeric.
double monge_ampere_richardson(const BundlePoint& pt, double step);

/// Hardy-slice ratio I(nu)/I(0) for rank <= 2, where
///   I(nu) = 2^{-r} int_{(0,1)^r} prod x_j^b (1-x_j)^nu prod_{i<j} |x_i-x_j|^a dx
/// (the polar-coordinate volume integral after x = t^2/(1+t^2)); equals
/// 1/c_nu = poch(p-n/r)_{n/r} / poch(nu+p-n/r)_{n/r}.
/// Gauss-Legendre tensor grid with `grid` nodes per axis.
double hardy_norm_quadrature(const SpaceParams& sp, long nu, long grid);

/// Squared norm of the constant section in the nu-th Bergman slice of the
/// disc bundle over the projective line: pi/(nu+1) * I(nu+1)/I(0) by
/// quadrature; the closed form is pi/((nu+1)(nu+2)).  This value separates
/// the +1-shifted Pochhammer argument from the unshifted one, which would
/// predict pi/(nu+1)^2.
double bergman_norm_quadrature(long nu);

/// Gauss-Legendre nodes/weights on (0,1), Newton-refined to ~1e-15.
std::vector<std::pair<double, double>> gauss_legendre(long n);

// Deterministic sampling helpers (identical streams on every platform).
double uniform01(std::mt19937_64& rng);
double normal01(std::mt19937_64& rng);
CMatrix random_cmatrix(long k, long m, double amp, std::mt19937_64& rng);
CMatrix random_unitary(long l, std::mt19937_64& rng);

}  // namespace hsk
