#include "fig8/roots.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace fig8;
using R = RealOf<128>;
using C = Cx<R>;

namespace {
double d(const R& x) { return static_cast<double>(x); }

Poly<C> from_doubles(std::initializer_list<double> ascending) {
    std::vector<C> c;
    for (double v : ascending) c.push_back(C(R(v)));
    return Poly<C>(c);
}
}  // namespace

TEST_CASE("quadratic factored by inspection") {
    // z^2 + z - 6 -> {2, -3}
    auto roots = poly_roots(from_doubles({-6, 1, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(d(abs(roots[0] - C(R(-3)))) < 1e-30);
    CHECK(d(abs(roots[1] - C(R(2)))) < 1e-30);
}

TEST_CASE("sigma_1 roots match the printed torsion values") {
    // z^3 - 12 z^2 + 20 z - 8; the three roots are the n = 1 torsion values
    auto roots = poly_roots(from_doubles({-8, 20, -12, 1}));
    REQUIRE(roots.size() == 3);
    std::vector<double> got;
    for (const auto& r : roots) {
        CHECK(d(fabs(r.im)) < 1e-30);
        got.push_back(d(r.re));
    }
    std::sort(got.begin(), got.end());
    std::vector<double> want{0.615957, 1.28621, 10.0978};
    for (size_t i = 0; i < 3; ++i)
        CHECK(std::fabs(got[i] - want[i]) < 1e-4 * std::max(1.0, want[i]));
}

TEST_CASE("triple root cluster at 256-bit precision") {
    using R2 = RealOf<256>;
    using C2 = Cx<R2>;
    // (z - 1/2)^3 expanded: z^3 - 3/2 z^2 + 3/4 z - 1/8
    Poly<C2> p({C2(R2(-0.125)), C2(R2(0.75)), C2(R2(-1.5)), C2(R2(1))});
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots)
        CHECK(static_cast<double>(abs(r - C2(R2(0.5)))) < 1e-5);
}

TEST_CASE("root count equals degree and residuals are small") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<C> want;
        int deg = 3 + trial * 2;
        for (int i = 0; i < deg; ++i) want.push_back(C(R(u(rng)), R(u(rng))));
        Poly<C> p = poly_from_roots(want);
        auto got = poly_roots(p);
        REQUIRE(static_cast<int>(got.size()) == deg);
        R norm = infinity_norm(p);
        for (const auto& r : got)
            CHECK(d(abs(eval_poly(p, r)) / norm) < 1e-12);
        // every intended root is hit
        for (const auto& w : want) {
            double best = 1e300;
            for (const auto& g : got) best = std::min(best, d(abs(g - w)));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("wide dynamic range coefficients") {
    // roots spread over several orders of magnitude force Newton-polygon
    // initial guesses to do the work
    std::vector<C> want{C(R("1e-6")), C(R("1e-3")), C(R(1)), C(R(250)), C(R("1e5")),
                        C(R("-3e4")), C(R("-0.5"))};
    Poly<C> p = poly_from_roots(want);
    auto got = poly_roots(p);
    REQUIRE(got.size() == want.size());
    for (const auto& w : want) {
        double best = 1e300;
        for (const auto& g : got) best = std::min(best, d(abs(g - w) / (1 + abs(w))));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("roots at the origin are returned with multiplicity") {
    // z^2 (z - 1)
    auto roots = poly_roots(from_doubles({0, 0, -1, 1}));
    REQUIRE(roots.size() == 3);
    int zeros = 0;
    for (const auto& r : roots)
        if (d(abs(r)) < 1e-30) ++zeros;
    CHECK(zeros == 2);
}

TEST_CASE("degree precondition") {
    CHECK_THROWS_AS(poly_roots(from_doubles({1})), std::invalid_argument);
    CHECK_THROWS_AS(poly_roots(Poly<C>{}), std::invalid_argument);
}

TEST_CASE("determinism: repeated runs give identical roots") {
    std::vector<C> want;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 12; ++i) want.push_back(C(R(u(rng)), R(u(rng))));
    Poly<C> p = poly_from_roots(want);
    auto a = poly_roots(p);
    auto b = poly_roots(p);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
