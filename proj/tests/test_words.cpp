#include "fig8/repvariety.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fig8;
using R = RealOf<128>;
using C = Cx<R>;

namespace {
double d(const R& x) { return static_cast<double>(x); }

std::mt19937 rng(101);

// random s in the annulus 0.1 < |s| < 1
C random_s() {
    std::uniform_real_distribution<double> radius(0.1, 0.999);
    std::uniform_real_distribution<double> angle(0, 6.2831853);
    return polar(R(radius(rng)), R(angle(rng)));
}
}  // namespace

TEST_CASE("x x^-1 is the identity word") {
    C s(R(0.7), R(0.2));
    C t(R(-0.3), R(0.1));
    Mat2<C> m = build_word("xX", s, t);
    CHECK(d(abs(m.a11 - C(R(1)))) < 1e-36);
    CHECK(d(abs(m.a22 - C(R(1)))) < 1e-36);
    CHECK(d(abs(m.a12)) < 1e-36);
    CHECK(d(abs(m.a21)) < 1e-36);
}

TEST_CASE("word matrices have unit determinant") {
    for (int i = 0; i < 50; ++i) {
        C s = random_s();
        C t(R(std::uniform_real_distribution<double>(-2, 2)(rng)),
            R(std::uniform_real_distribution<double>(-2, 2)(rng)));
        for (auto word : {kWordW, kWordWTilde, kWordLongitude, kWordRelatorLhs}) {
            Mat2<C> m = build_word(word, s, t);
            CHECK(d(abs(m.det() - C(R(1)))) < 1e-30);
        }
    }
}

TEST_CASE("longitude word is upper triangular on the variety") {
    for (int i = 0; i < 20; ++i) {
        C s = random_s();
        for (Branch b : kBothBranches) {
            C t = t_branch(s, b);
            Mat2<C> L = build_word(kWordLongitude, s, t);
            CHECK(d(abs(L.a21)) < 1e-28);
        }
    }
}

TEST_CASE("longitude closed form equals the word product on 1000 samples") {
    for (int i = 0; i < 1000; ++i) {
        C s = random_s();
        for (Branch b : kBothBranches) {
            C t = t_branch(s, b);
            Mat2<C> Lw = build_word(kWordLongitude, s, t);
            Mat2<C> Lc = longitude_closed_form(s, b);
            CHECK(d(infinity_norm(Lw - Lc)) < 1e-10);
            CHECK(d(abs(Lc.a21)) == 0.0);  // zero by construction
        }
    }
}

TEST_CASE("closed form at the printed n = 1 SL(2,R) parameter") {
    C s(R("0.611406"));
    for (Branch b : kBothBranches) {
        C t = t_branch(s, b);
        Mat2<C> Lw = build_word(kWordLongitude, s, t);
        Mat2<C> Lc = longitude_closed_form(s, b);
        CHECK(d(infinity_norm(Lw - Lc)) < 1e-10);
    }
}

TEST_CASE("trace of L does not depend on the branch") {
    for (int i = 0; i < 200; ++i) {
        C s = random_s();
        C tp = longitude_closed_form(s, Branch::plus).trace();
        C tm = longitude_closed_form(s, Branch::minus).trace();
        CHECK(d(abs(tp - tm)) < 1e-12);
        CHECK(d(abs(tp - longitude_trace(s))) < 1e-12);
    }
}

TEST_CASE("word jets carry exact derivatives") {
    // finite-difference cross-check of the jet derivatives of the longitude
    C s = random_s();
    C t = t_branch(s, Branch::plus) + C(R("1e-3"));  // slightly off-variety is fine
    Mat2Jet<R> J = build_word_jet(kWordLongitude, s, t);
    R h = ldexp(R(1), -60);
    Mat2<C> Lsp = build_word(kWordLongitude, s + C(h), t);
    Mat2<C> Lsm = build_word(kWordLongitude, s - C(h), t);
    Mat2<C> num_ds = (Lsp - Lsm) * C(R(1) / (2 * h));
    CHECK(d(infinity_norm(num_ds - J.ds) / (1 + infinity_norm(J.ds))) < 1e-12);
    Mat2<C> Ltp = build_word(kWordLongitude, s, t + C(h));
    Mat2<C> Ltm = build_word(kWordLongitude, s, t - C(h));
    Mat2<C> num_dt = (Ltp - Ltm) * C(R(1) / (2 * h));
    CHECK(d(infinity_norm(num_dt - J.dt) / (1 + infinity_norm(J.dt))) < 1e-12);
}

TEST_CASE("empty word and zero s are rejected") {
    C s(R(0.5)), t(R(0.5));
    CHECK_THROWS_AS(build_word("", s, t), std::invalid_argument);
    CHECK_THROWS_AS(build_word("x", C{}, t), std::domain_error);
}
