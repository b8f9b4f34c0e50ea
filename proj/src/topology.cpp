#include "hsk/topology.hpp"

#include <stdexcept>

namespace hsk {

static IntPoly one_minus_q_pow(long i) {
    // 1 - q^i
    std::vector<Integer> c(static_cast<std::size_t>(i) + 1, Integer(0));
    c[0] = 1;
    c[static_cast<std::size_t>(i)] = -1;
    return IntPoly(std::move(c));
}

IntPoly gaussian_binomial(long l, long k) {
    if (k < 0 || l < 0 || k > l) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= l");
    // [l,k]_q = prod_{i=l-k+1}^{l} (1-q^i) / prod_{i=1}^{k} (1-q^i),
    // dividing factor by factor keeps intermediate degrees small.
    IntPoly acc = IntPoly::constant(Integer(1));
    for (long i = 1; i <= k; ++i) {
        acc *= one_minus_q_pow(l - k + i);
        acc = exact_div(acc, one_minus_q_pow(i));
    }
    return acc;
}

std::string CohEntry::str() const {
    switch (kind) {
        case Z: return "Z";
        case Torsion: return "Z_" + std::to_string(order);
        case Zero: return "0";
    }
    return "?";
}

CohEntry CohomologyTable::entry(long j) const {
    if (j < 0 || j >= static_cast<long>(entries.size())) return CohEntry{CohEntry::Zero, 0};
    return entries[static_cast<std::size_t>(j)];
}

CohomologyTable lens_cohomology(long n, long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("lens_cohomology: need n >= 1, m >= 1");
    CohomologyTable t;
    t.n = n;
    t.m = m;
    t.entries.assign(static_cast<std::size_t>(2 * n + 2), CohEntry{CohEntry::Zero, 0});
    t.entries.front() = CohEntry{CohEntry::Z, 0};
    t.entries.back() = CohEntry{CohEntry::Z, 0};
    if (m > 1)
        for (long j = 2; j <= 2 * n; j += 2) t.entries[static_cast<std::size_t>(j)] = CohEntry{CohEntry::Torsion, m};
    return t;
}

bool hh_condition(const IntPoly& poincare, long n) {
    if (poincare.degree() != n) throw std::invalid_argument("hh_condition: degree mismatch");
    for (long j = 1; j <= n; ++j)
        if (poincare.coeff(static_cast<std::size_t>(j) - 1) != poincare.coeff(static_cast<std::size_t>(j)))
            return false;
    return true;
}

LensVerdict lens_obstruction(long k, long l) {
    if (!(1 <= k && k <= l - k)) throw std::invalid_argument("lens_obstruction: need 1 <= k <= l-k");
    LensVerdict v;
    v.k = k;
    v.l = l;
    v.n = k * (l - k);
    v.real_dim = 2 * v.n + 1;
    v.poincare = gaussian_binomial(l, k);
    v.lens_candidate = hh_condition(v.poincare, v.n);
    return v;
}

}  // namespace hsk
