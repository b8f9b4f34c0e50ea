#include "hsk/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hsk {

SpaceParams space_from_params(long r, long a, long b) {
    if (r < 1) throw std::invalid_argument("space_from_params: rank must be >= 1");
    if (a < 0 || b < 0) throw std::invalid_argument("space_from_params: negative multiplicity");
    SpaceParams sp;
    sp.r = r;
    sp.a = a;
    sp.b = b;
    sp.n = r + r * (r - 1) * a / 2 + r * b;
    sp.p = (r - 1) * a + 2 + b;
    return sp;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::EIII: return "EIII";
        case Family::EVII: return "EVII";
    }
    return "?";
}

std::string SpaceLabel::str() const {
    switch (family) {
        case Family::I: return "I(" + std::to_string(k) + "," + std::to_string(m) + ")";
        case Family::II: return "II(" + std::to_string(m) + ")";
        case Family::III: return "III(" + std::to_string(m) + ")";
        case Family::IV: return "IV(" + std::to_string(m) + ")";
        case Family::EIII: return "EIII";
        case Family::EVII: return "EVII";
    }
    return "?";
}

static void validate(const SpaceLabel& l) {
    switch (l.family) {
        case Family::I:
            if (!(1 <= l.k && l.k <= l.m)) throw std::invalid_argument("I(k,m) needs 1 <= k <= m");
            break;
        case Family::II:
            if (l.m < 5) throw std::invalid_argument("II(m) needs m >= 5");
            break;
        case Family::III:
            if (l.m < 1) throw std::invalid_argument("III(m) needs m >= 1");
            break;
        case Family::IV:
            if (l.m < 3) throw std::invalid_argument("IV(m) needs m >= 3");
            break;
        default: break;
    }
}

SpaceParams space_from_label(const SpaceLabel& l) {
    validate(l);
    switch (l.family) {
        // For rank 1 the multiplicity a is vacuous; store a = 2 so I(1,m)
        // stays consistent with the rest of the I-family row.
        case Family::I: return space_from_params(std::min(l.k, l.m), 2, std::labs(l.m - l.k));
        case Family::II: return space_from_params(l.m / 2, 4, l.m % 2 == 0 ? 0 : 2);
        case Family::III: return space_from_params(l.m, 1, 0);
        case Family::IV: return space_from_params(2, l.m - 2, 0);
        case Family::EIII: return space_from_params(2, 6, 4);
        case Family::EVII: return space_from_params(3, 8, 0);
    }
    throw std::invalid_argument("unknown family");
}

long known_dimension(const SpaceLabel& l) {
    switch (l.family) {
        case Family::I: return l.k * l.m;
        case Family::II: return l.m * (l.m - 1) / 2;
        case Family::III: return l.m * (l.m + 1) / 2;
        case Family::IV: return l.m;
        case Family::EIII: return 16;
        case Family::EVII: return 27;
    }
    throw std::invalid_argument("unknown family");
}

static long parse_long(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("label: expected an integer");
    return std::atol(std::string(s.substr(start, pos - start)).c_str());
}

SpaceLabel parse_label(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));

    SpaceLabel l;
    if (t == "EIII") {
        l.family = Family::EIII;
        return l;
    }
    if (t == "EVII") {
        l.family = Family::EVII;
        return l;
    }

    std::size_t head = 0;
    if (t.rfind("III", 0) == 0) {
        l.family = Family::III;
        head = 3;
    } else if (t.rfind("II", 0) == 0) {
        l.family = Family::II;
        head = 2;
    } else if (t.rfind("IV", 0) == 0) {
        l.family = Family::IV;
        head = 2;
    } else if (t.rfind("I", 0) == 0) {
        l.family = Family::I;
        head = 1;
    } else {
        throw std::invalid_argument("unrecognized space label '" + std::string(text) + "'");
    }

    std::size_t pos = head;
    if (pos >= t.size() || t[pos] != '(') throw std::invalid_argument("label: expected '('");
    ++pos;
    long first = parse_long(t, pos);
    if (l.family == Family::I) {
        if (pos >= t.size() || t[pos] != ',') throw std::invalid_argument("I(k,m): expected ','");
        ++pos;
        long second = parse_long(t, pos);
        l.k = first;
        l.m = second;
    } else {
        l.m = first;
    }
    if (pos >= t.size() || t[pos] != ')' || pos + 1 != t.size())
        throw std::invalid_argument("label: expected ')' at end");
    validate(l);
    return l;
}

std::vector<SpaceLabel> default_catalog(long max_l) {
    constexpr long kMaxDim = 27;
    std::vector<SpaceLabel> cat;
    for (long k = 1; 2 * k <= max_l; ++k)
        for (long m = k; k + m <= max_l; ++m) cat.push_back({Family::I, k, m});
    for (long m = 5; m <= max_l; ++m)
        if (m * (m - 1) / 2 <= kMaxDim) cat.push_back({Family::II, 0, m});
    for (long m = 1; m <= max_l; ++m)
        if (m * (m + 1) / 2 <= kMaxDim) cat.push_back({Family::III, 0, m});
    for (long m = 3; m <= max_l && m <= kMaxDim; ++m) cat.push_back({Family::IV, 0, m});
    cat.push_back({Family::EIII});
    cat.push_back({Family::EVII});
    return cat;
}

}  // namespace hsk
