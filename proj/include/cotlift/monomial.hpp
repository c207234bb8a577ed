#ifndef COTLIFT_MONOMIAL_HPP
#define COTLIFT_MONOMIAL_HPP

#include <array>
#include <cstdint>

namespace cotlift {

// Hard dimension bound: all constructions here are desk-scale.
inline constexpr int kMaxDim = 6;

// Exponent vector over at most kMaxDim variables. Unused slots stay zero, so
// a single fixed-size type serves every dimension.
struct Mono {
    std::array<std::uint8_t, kMaxDim> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_unit() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }
    int max_var() const { // highest variable index present, -1 if constant
        for (int i = kMaxDim - 1; i >= 0; --i)
            if (e[i] != 0) return i;
        return -1;
    }
    bool divides(const Mono& m) const {
        for (int i = 0; i < kMaxDim; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kMaxDim; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
        return r;
    }
    friend Mono operator/(const Mono& a, const Mono& b) { // caller guarantees divisibility
        Mono r;
        for (int i = 0; i < kMaxDim; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
        return r;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

inline Mono mono_var(int var, int exp = 1) {
    Mono m;
    m.e[var] = static_cast<std::uint8_t>(exp);
    return m;
}

// Fixed graded-lexicographic order (degree first, then lex with earlier
// variables weighing more). Canonical forms sort terms descending in it.
inline bool grlex_less(const Mono& a, const Mono& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kMaxDim; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(b, a); }
};

} // namespace cotlift

#endif
