#include "fig8/complex.hpp"
#include "fig8/poly.hpp"
#include "fig8/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fig8;
using R = RealOf<128>;
using C = Cx<R>;

namespace {
double d(const R& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("complex arithmetic basics") {
    C a(R(3), R(4));
    CHECK(d(abs(a)) == Catch::Approx(5.0));
    C b = a * conj(a);
    CHECK(d(b.re) == Catch::Approx(25.0));
    CHECK(d(b.im) == 0.0);
    C q = C(R(1)) / a;
    CHECK(d(abs(q * a - C(R(1)))) < 1e-36);
}

TEST_CASE("principal square root") {
    C z(R(-4), R(0));
    C r = sqrt(z);
    CHECK(d(r.re) == Catch::Approx(0.0).margin(1e-30));
    CHECK(d(r.im) == Catch::Approx(2.0));
    // principal branch: Re >= 0 on random samples, square returns input
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 50; ++i) {
        C w(R(u(rng)), R(u(rng)));
        C s = sqrt(w);
        CHECK(s.re >= 0);
        CHECK(d(abs(s * s - w)) < 1e-30);
    }
}

TEST_CASE("eval_poly examples") {
    // z^2 + 1 at i -> 0
    Poly<C> p({C(R(1)), C{}, C(R(1))});
    CHECK(d(abs(eval_poly(p, C(R(0), R(1))))) < 1e-36);

    // sigma_1(0) = -8, coefficients ascending: -8 + 20 t - 12 t^2 + t^3
    Poly<C> sigma1({C(R(-8)), C(R(20)), C(R(-12)), C(R(1))});
    CHECK(d(eval_poly(sigma1, C{}).re) == Catch::Approx(-8.0));

    // sigma_2(0) = -128
    Poly<C> sigma2({C(R(-128)), C(R(5376)), C(R(-11008)), C(R(8720)), C(R(-3384)), C(R(660)),
                    C(R(-56)), C(R(1))});
    CHECK(d(eval_poly(sigma2, C{}).re) == Catch::Approx(-128.0));
}

TEST_CASE("round_to_rational spec cases") {
    R tol("1e-6");
    SECTION("near-integer with stray imaginary dust") {
        C c(R("660.0000003"), R("1e-9"));
        auto r = round_to_rational(c, tol);
        REQUIRE(r.ok);
        CHECK(r.value == BigRat(660));
    }
    SECTION("half is rejected at denominator bound 1") {
        auto r = round_to_rational(C(R(0.5)), tol, 1);
        CHECK_FALSE(r.ok);
        CHECK(d(r.residual) == Catch::Approx(0.5));
    }
    SECTION("negative coefficient") {
        C c(R(-3384), R("-2e-8"));
        c.re -= R("1e-8");
        auto r = round_to_rational(c, tol);
        REQUIRE(r.ok);
        CHECK(r.value == BigRat(-3384));
    }
    SECTION("denominator bound above 1 recovers halves") {
        auto r = round_to_rational(C(R(0.5)), tol, 2);
        REQUIRE(r.ok);
        CHECK(r.value == BigRat(1, 2));
    }
    SECTION("idempotent on successes") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> num(-5000, 5000);
        for (int i = 0; i < 100; ++i) {
            C c(R(num(rng)) + R("3e-7"), R("1e-8"));
            auto r1 = round_to_rational(c, tol);
            REQUIRE(r1.ok);
            C back(R(numerator(r1.value)) / R(denominator(r1.value)), R(0));
            auto r2 = round_to_rational(back, tol);
            REQUIRE(r2.ok);
            CHECK(r2.value == r1.value);
            CHECK(r2.residual == 0);
        }
    }
}

TEST_CASE("Laurent shift is exact and multiplication shifts exponents") {
    using ZL = LaurentPoly<BigInt>;
    ZL p(-2, {BigInt(-1), BigInt(0), BigInt(3), BigInt(0), BigInt(-1)});  // 3 - s^-2 - s^2
    ZL q = p.shifted(5);
    CHECK(q.low_exp() == 3);
    CHECK(q.high_exp() == 7);
    ZL mono = ZL::monomial(BigInt(1), 5);
    CHECK(p * mono == q);

    // no stored zero end coefficients after arithmetic
    ZL z = p - p;
    CHECK(z.is_zero());
    ZL w = p + ZL::monomial(BigInt(1), 2);  // cancels the top term
    CHECK(w.high_exp() == 0);
}

TEST_CASE("laurent evaluation agrees with direct expression") {
    using ZL = LaurentPoly<BigInt>;
    ZL c(-2, {BigInt(-1), BigInt(0), BigInt(3), BigInt(0), BigInt(-1)});
    C s(R("0.6"), R("0.35"));
    C direct = C(R(3)) - inverse(s * s) - s * s;
    CHECK(d(abs(eval_laurent(c, s) - direct)) < 1e-35);
}

TEST_CASE("poly_from_roots is balanced and monic") {
    std::vector<C> roots{C(R(2)), C(R(-3))};
    Poly<C> p = poly_from_roots(roots);
    // (z - 2)(z + 3) = z^2 + z - 6
    REQUIRE(p.degree() == 2);
    CHECK(d(p.coeffs[0].re) == Catch::Approx(-6.0));
    CHECK(d(p.coeffs[1].re) == Catch::Approx(1.0));
    CHECK(d(p.coeffs[2].re) == Catch::Approx(1.0));
    CHECK(poly_from_roots(std::vector<C>{}).degree() == 0);
}
