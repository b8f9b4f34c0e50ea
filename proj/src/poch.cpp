#include "hsk/poch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace hsk {

double gindikin_log_gamma(double c, long r, long a) {
    double acc = 0.0;
    for (long j = 1; j <= r; ++j) {
        double arg = c - 0.5 * static_cast<double>(a) * static_cast<double>(j - 1);
        if (arg <= 0.0) throw GammaPoleError("gindikin_log_gamma: non-positive Gamma argument");
        acc += std::lgamma(arg);
    }
    return acc;
}

double poch_numeric(double c, double s, long r, long a) {
    return std::exp(gindikin_log_gamma(c + s, r, a) - gindikin_log_gamma(c, r, a));
}

RatPoly poch_polynomial(long r, long a, const Rational& s, const Rational& c0) {
    if (r < 1) throw std::invalid_argument("poch_polynomial: rank must be >= 1");
    if (s < 0) throw std::invalid_argument("poch_polynomial: s must be >= 0");

    // Offset-mod-1 classes of the Gamma arguments, numerator and denominator
    // sides kept separately.
    std::map<Rational, std::vector<Rational>> num_cls, den_cls;
    const Rational half_a = make_rat(a, 2);
    for (long j = 1; j <= r; ++j) {
        Rational shift = half_a * (j - 1);
        Rational nu_off = c0 + s - shift;
        Rational de_off = c0 - shift;
        num_cls[frac_part(nu_off)].push_back(nu_off);
        den_cls[frac_part(de_off)].push_back(de_off);
    }

    if (num_cls.size() != den_cls.size())
        throw NonPolynomialError("poch_polynomial: offset classes do not match");

    RatPoly result = RatPoly::constant(1);
    for (auto& [key, nums] : num_cls) {
        auto it = den_cls.find(key);
        if (it == den_cls.end() || it->second.size() != nums.size())
            throw NonPolynomialError("poch_polynomial: class cardinalities differ");
        auto& dens = it->second;
        std::sort(nums.begin(), nums.end());
        std::sort(dens.begin(), dens.end());
        for (std::size_t i = 0; i < nums.size(); ++i) {
            Rational gap = nums[i] - dens[i];
            if (gap < 0 || !is_integer(gap))
                throw NonPolynomialError("poch_polynomial: paired arguments differ by " + rat_str(gap));
            unsigned long g = gap.get_num().get_ui();
            result *= RatPoly::rising_factorial(dens[i], g);
        }
    }
    return result;
}

Rational poch_value(const Rational& c, const Rational& s, long r, long a) {
    return poch_polynomial(r, a, s, c).evaluate(0);
}

}  // namespace hsk
