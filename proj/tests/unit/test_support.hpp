#ifndef COTLIFT_TEST_SUPPORT_HPP
#define COTLIFT_TEST_SUPPORT_HPP

#include "cotlift/base_scalar.hpp"
#include "cotlift/fiber_scalar.hpp"

#include <random>

namespace cotlift::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small random polynomial in x1..xn, degree <= deg. May be zero.
inline Poly random_poly(Rng& rng, int n, int deg, int terms = 3) {
    Poly p;
    int k = uniform(rng, 0, terms);
    for (int t = 0; t < k; ++t) {
        Mono m;
        int budget = uniform(rng, 0, deg);
        for (int d = 0; d < budget; ++d) m.e[uniform(rng, 0, n - 1)] += 1;
        int c = uniform(rng, -4, 4);
        p.add_term(m, Rat(c));
    }
    return p;
}

inline Poly random_nonzero_poly(Rng& rng, int n, int deg) {
    for (;;) {
        Poly p = random_poly(rng, n, deg);
        if (!p.is_zero()) return p;
    }
}

// Random rational function; denominators stay small so gcd work is exercised
// without blowing up the tests.
inline BaseScalar random_scalar(Rng& rng, int n, int deg, bool with_denominator = false) {
    Poly num = random_poly(rng, n, deg);
    if (!with_denominator || uniform(rng, 0, 2) != 0) return BaseScalar(num);
    Poly den;
    while (den.is_zero()) den = random_poly(rng, n, 1) + Poly(uniform(rng, 1, 3));
    return BaseScalar(num, den);
}

// Random fiberwise polynomial of p-degree <= pdeg with polynomial coefficients.
inline FiberScalar random_fiber(Rng& rng, int n, int xdeg, int pdeg, int terms = 4) {
    FiberScalar f;
    int k = uniform(rng, 0, terms);
    for (int t = 0; t < k; ++t) {
        Mono m;
        int budget = uniform(rng, 0, pdeg);
        for (int d = 0; d < budget; ++d) m.e[uniform(rng, 0, n - 1)] += 1;
        f.add_term(m, BaseScalar(random_poly(rng, n, xdeg)));
    }
    return f;
}

// Random homogeneous fiber polynomial of exact p-degree d (possibly zero).
inline FiberScalar random_homogeneous_fiber(Rng& rng, int n, int xdeg, int d, int terms = 3) {
    FiberScalar f;
    int k = uniform(rng, 1, terms);
    for (int t = 0; t < k; ++t) {
        Mono m;
        for (int j = 0; j < d; ++j) m.e[uniform(rng, 0, n - 1)] += 1;
        f.add_term(m, BaseScalar(random_poly(rng, n, xdeg)));
    }
    return f;
}

} // namespace cotlift::testing

#endif
