#pragma once

#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "hsk/rational.hpp"

namespace hsk {

/// Dense univariate polynomial over an exact scalar (mpq_class or mpz_class).
///
/// Coefficients are stored by ascending degree with trailing zeros trimmed,
/// so degree() is always the index of the last nonzero coefficient.  The zero
/// polynomial reports the sentinel kNegInfinity.  All arithmetic is exact.
template <typename Scalar>
class Polynomial {
public:
    static constexpr int kNegInfinity = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Scalar& v) { return Polynomial(std::vector<Scalar>{v}); }

    /// coeff * x^k
    static Polynomial monomial(const Scalar& coeff, std::size_t k) {
        std::vector<Scalar> c(k + 1, Scalar(0));
        c[k] = coeff;
        return Polynomial(std::move(c));
    }

    /// prod_{i=0}^{m-1} (x + base + i); the empty product (m = 0) is 1.
    static Polynomial rising_factorial(const Scalar& base, unsigned long m) {
        Polynomial p = constant(Scalar(1));
        for (unsigned long i = 0; i < m; ++i)
            p *= Polynomial(std::vector<Scalar>{Scalar(base + Scalar(static_cast<long>(i))), Scalar(1)});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the stored range).
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// P(alpha * x): coefficient k picks up alpha^k.
    Polynomial scale_arg(const Scalar& alpha) const {
        std::vector<Scalar> c(c_);
        Scalar pw(1);
        for (std::size_t k = 1; k < c.size(); ++k) {
            pw *= alpha;
            c[k] *= pw;
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        if (c_.empty() || o.c_.empty()) {
            c_.clear();
            return *this;
        }
        std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        c_ = std::move(r);
        trim();
        return *this;
    }
    Polynomial& operator*=(const Scalar& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

using RatPoly = Polynomial<Rational>;
using IntPoly = Polynomial<Integer>;

struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline Rational scalar_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Integer scalar_exact_div(const Integer& a, const Integer& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InexactDivision("coefficient division is not exact");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
}  // namespace detail

/// Long division: returns {quotient, remainder}.  Over mpz_class every
/// coefficient division along the way must be exact, else InexactDivision.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& num,
                                                         const Polynomial<Scalar>& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem(num.coeffs());
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial<Scalar>(), num};
    std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - dd) + 1, Scalar(0));
    for (int k = num.degree(); k >= dd; --k) {
        const std::size_t ku = static_cast<std::size_t>(k);
        if (rem[ku] == 0) continue;
        Scalar q = detail::scalar_exact_div(rem[ku], den.leading());
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Exact quotient; throws InexactDivision when a remainder survives.
template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
    return q;
}

}  // namespace hsk
