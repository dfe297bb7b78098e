#include "fig8/repvariety.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fig8;
using R = RealOf<128>;
using C = Cx<R>;

namespace {
double d(const R& x) { return static_cast<double>(x); }
std::mt19937 rng(7);
C random_s() {
    std::uniform_real_distribution<double> radius(0.1, 0.999);
    std::uniform_real_distribution<double> angle(0, 6.2831853);
    return polar(R(radius(rng)), R(angle(rng)));
}
}  // namespace

TEST_CASE("f at simple points") {
    CHECK(d(f_of(C(R(1)), C{}).re) == Catch::Approx(1.0));  // 3 - 1 - 1
    CHECK_THROWS_AS(f_of(C{}, C{}), std::domain_error);
}

TEST_CASE("f vanishes on both branch values") {
    // printed n = 1 table parameter
    C s(R("0.611406"));
    CHECK(d(abs(f_of(s, t_branch(s, Branch::plus)))) < 1e-9);
    CHECK(d(abs(f_of(s, t_branch(s, Branch::minus)))) < 1e-9);
}

TEST_CASE("f agrees with the quadratic-form identity") {
    // independent oracle: solve t^2 + (5 - u^2)(t + 1) = 0 by the quadratic
    // formula and check f at both solutions
    for (int i = 0; i < 200; ++i) {
        C s = random_s();
        C u = s + inverse(s);
        C cc = C(R(5)) - u * u;
        C disc = sqrt(cc * cc - C(R(4)) * cc);
        for (C t : {(-cc + disc) / C(R(2)), (-cc - disc) / C(R(2))}) {
            CHECK(d(abs(f_of(s, t))) < 1e-12 * (1 + d(norm2(s))));
        }
        // and the displayed form equals the quadratic form off the variety too
        C t0(R(0.3), R(-0.8));
        C quad = t0 * t0 + cc * (t0 + C(R(1)));
        CHECK(d(abs(f_of(s, t0) - quad)) < 1e-30 * (1 + d(abs(quad))));
    }
}

TEST_CASE("t branches at s = 1 are the primitive sixth roots pair") {
    // discriminant(1) = -3, so t = (-1 +- i sqrt 3)/2
    C tp = t_branch(C(R(1)), Branch::plus);
    C tm = t_branch(C(R(1)), Branch::minus);
    CHECK(d(tp.re) == Catch::Approx(-0.5));
    CHECK(d(tp.im) == Catch::Approx(std::sqrt(3.0) / 2));
    CHECK(d(tm.re) == Catch::Approx(-0.5));
    CHECK(d(tm.im) == Catch::Approx(-std::sqrt(3.0) / 2));
}

TEST_CASE("both branches real on the bounded positive interval") {
    auto intervals = real_parameter_intervals<R>();
    const auto& bounded = intervals[2];  // (0, e2]
    CHECK(d(bounded.hi) == Catch::Approx(0.618034).epsilon(1e-5));
    std::uniform_real_distribution<double> u(1e-3, 0.618);
    for (int i = 0; i < 100; ++i) {
        C s(R(u(rng)));
        for (Branch b : kBothBranches) {
            C t = t_branch(s, b);
            CHECK(d(fabs(t.im)) < 1e-30);
        }
    }
}

TEST_CASE("interval endpoints multiply to one and bound the discriminant sign") {
    auto iv = real_parameter_intervals<R>();
    R e1 = iv[3].lo, e2 = iv[2].hi;
    CHECK(d(fabs(e1 * e2 - 1)) < 1e-36);
    CHECK(d(iv[0].hi) == Catch::Approx(-1.61803).epsilon(1e-5));
    CHECK(d(iv[1].lo) == Catch::Approx(-0.618034).epsilon(1e-5));

    // Delta > 0 inside the four intervals, Delta < 0 in the gap
    std::uniform_real_distribution<double> inside(0.01, 0.6180);
    std::uniform_real_distribution<double> gap(0.6181, 1.618);
    std::uniform_real_distribution<double> outer(1.61804, 5.0);
    for (int i = 0; i < 1000; ++i) {
        R a(inside(rng));
        CHECK(discriminant(C(a)).re > 0);
        R g(gap(rng));
        CHECK(discriminant(C(g)).re < 0);
        R o(outer(rng));
        CHECK(discriminant(C(o)).re > 0);
        CHECK(discriminant(C(-a)).re > 0);
        CHECK(discriminant(C(-o)).re > 0);
    }
    // membership helpers honor open/closed ends
    CHECK(iv[2].contains(e2));
    CHECK_FALSE(iv[2].contains(R(0)));
    CHECK(iv[3].contains(e1));
    CHECK_FALSE(iv[1].contains(R(0)));
}

TEST_CASE("surgery entries vanish only on solutions") {
    SurgerySpec one(1);
    // the n = 1 SL(2,R) parameter is close to a solution at printed precision
    C s(R("0.611406"));
    Branch b = Branch::minus;
    // pick the branch with the smaller residual; the table does not say
    auto ep = surgery_system(one, s, Branch::plus);
    auto em = surgery_system(one, s, Branch::minus);
    R rp = std::max(abs(ep.d11), abs(ep.d12));
    R rm = std::max(abs(em.d11), abs(em.d12));
    CHECK(d(std::min(rp, rm)) < 1e-4);  // printed digits limit the residual
    // random non-solutions are far from zero
    C bad(R(0.35), R(0.1));
    auto eb = surgery_system(one, bad, Branch::plus);
    CHECK(d(abs(eb.d11)) + d(abs(eb.d12)) > 1e-3);
    CHECK_THROWS_AS(SurgerySpec(0), std::invalid_argument);
}

TEST_CASE("d11 = 0 forces d22 = 0 on the triangular structure") {
    // with det L = 1 and L upper triangular, (L^-n)_11 (L^-n)_22 = 1, so
    // d11 = s - (L^-n)_11 = 0 makes d22 = 1/s - (L^-n)_22 vanish too;
    // verify numerically near a solution
    SurgerySpec one(1);
    std::uniform_real_distribution<double> u(0.6113, 0.6115);
    for (int i = 0; i < 20; ++i) {
        C s(R(u(rng)));
        for (Branch b : kBothBranches) {
            auto e = surgery_system(one, s, b);
            CHECK(d(abs(e.d22)) <= 2 * d(abs(e.d11)) / d(norm2(s)) + 1e-25);
        }
    }
}

TEST_CASE("triangular power handles the degenerate eigenvalue") {
    // compare against plain repeated multiplication
    for (double lam : {1.0, -1.0}) {
        C lambda(R(lam) + R("1e-30"));
        C beta(R(0.75), R(-0.25));
        Mat2<C> u{lambda, beta, C{}, inverse(lambda)};
        Mat2<C> direct = Mat2<C>::identity(C(R(1)));
        for (int k = 0; k < 7; ++k) direct = direct * u;
        Mat2<C> closed = upper_triangular_power(lambda, beta, 7);
        CHECK(d(infinity_norm(direct - closed)) < 1e-25);
        // negative power
        Mat2<C> inv = u.adjugate();
        Mat2<C> directn = Mat2<C>::identity(C(R(1)));
        for (int k = 0; k < 5; ++k) directn = directn * inv;
        Mat2<C> closedn = upper_triangular_power(lambda, beta, -5);
        CHECK(d(infinity_norm(directn - closedn)) < 1e-25);
    }
    // far from degenerate, same agreement
    C lambda(R(1.5), R(0.25));
    C beta(R(-0.5), R(1.25));
    Mat2<C> u{lambda, beta, C{}, inverse(lambda)};
    Mat2<C> direct = u * u * u;
    CHECK(d(infinity_norm(direct - upper_triangular_power(lambda, beta, 3))) < 1e-30);
}
