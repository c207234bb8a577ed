#include "doctest.h"

#include "cotlift/error.hpp"
#include "cotlift/parser.hpp"
#include "test_support.hpp"

using namespace cotlift;
using namespace cotlift::testing;

TEST_SUITE_BEGIN("symexpr");

TEST_CASE("canonicalize basic identities") {
    CHECK(parse_base("x1*x2 - x2*x1", 2).is_zero());
    CHECK(parse_base("x1^2/x1", 2) == parse_base("x1", 2));
    CHECK(parse_base("1/(1+x1) + 1/(1-x1)", 2) == parse_base("2/(1-x1^2)", 2));
}

TEST_CASE("canonicalize errors") {
    CHECK_THROWS_AS(parse_base("1/(x1 - x1)", 2), input_error);
    CHECK_THROWS_AS(parse_base("1/0", 2), input_error);
    CHECK_THROWS_AS(parse_base("p1 + x1", 2), parse_error);          // momenta rejected on the base
    CHECK_THROWS_AS(parse_fiber("x3", 2), parse_error);              // index out of range
    CHECK_THROWS_AS(parse_fiber("x1 +", 2), parse_error);
    CHECK_THROWS_AS(parse_fiber("(x1", 2), parse_error);
    CHECK_THROWS_AS(parse_fiber("1/p1", 2), parse_error);            // momentum-dependent divisor
    CHECK_THROWS_AS(parse_fiber("x1", 9), input_error);              // dimension overflow
}

TEST_CASE("rationals and whitespace") {
    CHECK(parse_base("3/2 * x1 - 1/2*x1", 1) == parse_base("x1", 1));
    CHECK(parse_base("  1/3+\n1/6 ", 1) == parse_base("1/2", 1));
    CHECK(parse_fiber("p1*p2 - p2*p1", 2).is_zero());
    CHECK(parse_fiber("-x1^2", 1) == -parse_fiber("x1^2", 1));
}

TEST_CASE("partial derivatives") {
    CHECK(parse_fiber("x1^2*p2", 2).dx(0) == parse_fiber("2*x1*p2", 2));
    CHECK(parse_fiber("p1*p2 + x3", 3).dp(0) == parse_fiber("p2", 3));
    CHECK(parse_fiber("1/x1", 1).dx(0) == parse_fiber("-1/x1^2", 1));
}

TEST_CASE("homogeneous components") {
    FiberScalar f = parse_fiber("p1*p2 + x1*p1 + 3", 2);
    CHECK(f.homogeneous_component(2) == parse_fiber("p1*p2", 2));
    CHECK(f.homogeneous_component(0) == parse_fiber("3", 2));
    CHECK(f.homogeneous_component(1) == parse_fiber("x1*p1", 2));
    CHECK(FiberScalar().homogeneous_component(3).is_zero());
}

TEST_CASE("ring laws on random instances") {
    Rng rng(20240811);
    for (int it = 0; it < 220; ++it) {
        int n = uniform(rng, 1, 3);
        BaseScalar a = random_scalar(rng, n, 2, true);
        BaseScalar b = random_scalar(rng, n, 2, true);
        BaseScalar c = random_scalar(rng, n, 2, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("Leibniz rule for partials") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        int n = uniform(rng, 1, 3);
        FiberScalar f = random_fiber(rng, n, 2, 2);
        FiberScalar g = random_fiber(rng, n, 2, 2);
        for (int v = 0; v < n; ++v) {
            CHECK((f * g).dx(v) == f.dx(v) * g + f * g.dx(v));
            CHECK((f * g).dp(v) == f.dp(v) * g + f * g.dp(v));
        }
    }
}

TEST_CASE("homogeneous decomposition reassembles") {
    Rng rng(99);
    for (int it = 0; it < 60; ++it) {
        int n = uniform(rng, 1, 3);
        FiberScalar f = random_fiber(rng, n, 2, 4, 6);
        FiberScalar sum;
        for (int d = 0; d <= 4; ++d) sum += f.homogeneous_component(d);
        CHECK(sum == f);
    }
}

TEST_CASE("gcd divides both inputs") {
    Rng rng(1234);
    for (int it = 0; it < 80; ++it) {
        int n = uniform(rng, 1, 3);
        Poly a = random_poly(rng, n, 2);
        Poly b = random_poly(rng, n, 2);
        Poly g = random_nonzero_poly(rng, n, 1);
        Poly d = poly_gcd(a * g, b * g);
        if (!(a * g).is_zero()) CHECK_NOTHROW(divexact(a * g, d));
        if (!(b * g).is_zero()) CHECK_NOTHROW(divexact(b * g, d));
        if (!a.is_zero() || !b.is_zero()) CHECK_NOTHROW(divexact(d, g.monic()));
    }
}

TEST_CASE("printer round-trips through the parser") {
    Rng rng(4242);
    for (int it = 0; it < 80; ++it) {
        int n = uniform(rng, 1, 3);
        FiberScalar f = random_fiber(rng, n, 2, 2);
        CHECK(parse_fiber(f.str(), n) == f);
        BaseScalar s = random_scalar(rng, n, 2, true);
        CHECK(parse_base(s.str(), n) == s);
    }
}

TEST_SUITE_END();
