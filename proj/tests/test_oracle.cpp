#include "fig8/oracle.hpp"
#include "fig8/torsion.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fig8;
using R = RealOf<128>;
using C = Cx<R>;

#ifndef FIG8_GOLDEN_DIR
#define FIG8_GOLDEN_DIR ""
#endif

namespace {
const std::string kDir = FIG8_GOLDEN_DIR;
double d(const R& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("fixture row counts follow the printed tables") {
    for (int n = 1; n <= 10; ++n) {
        auto rows = golden::load_rows(kDir, n);
        CHECK(static_cast<int>(rows.size()) == 3 * n);
        int su2 = 0, pairs = 0, real_rows = 0;
        for (const auto& r : rows) {
            if (r.su2) ++su2;
            if (r.is_pair()) ++pairs;
            if (!r.su2 && !r.is_pair()) ++real_rows;
        }
        CHECK(su2 == 2 * n);
        CHECK(pairs == n - 1);
        CHECK(real_rows == 1);  // the lone SL(2,R) row
        // classes = printed rows + suppressed conjugates
        CHECK(su2 + 2 * pairs + real_rows == 4 * n - 1);
    }
}

TEST_CASE("fixture self-consistency: u = s + 1/s and tau(u) = tau") {
    for (int n = 1; n <= 10; ++n) {
        auto rows = golden::load_rows(kDir, n);
        auto problems = golden_self_check<R>(rows, n);
        for (const auto& p : problems) UNSCOPED_INFO(p);
        CHECK(problems.empty());
    }
}

TEST_CASE("sigma fixtures: degrees, leading coefficient, known quirks") {
    int quirks = 0;
    for (int n = 1; n <= 10; ++n) {
        auto g = golden::load_sigma(kDir, n);
        REQUIRE(static_cast<int>(g.coeffs.size()) == 4 * n);
        CHECK(g.coeffs.front().degree == 4 * n - 1);
        CHECK(g.coeffs.front().value == 1.0);
        CHECK(g.coeffs.front().exact);
        for (const auto& c : g.coeffs)
            if (!c.quirk.empty()) ++quirks;
    }
    CHECK(quirks == 3);  // sigma_6 t^8 duplication, sigma_7 t^14 and t^22 misprints
}

TEST_CASE("brute force checks at specific points") {
    CHECK(d(brute_force_relator_check(C(R(2)), C{})) > 0.1);
    CHECK(d(brute_force_relator_check(C(R(1)), C(R(-1)))) > 1e-3);
    Mat2<C> I = Mat2<C>::identity(C(R(1)));
    CHECK(d(surgery_residual_matrices(I, I, 7)) == 0.0);
    CHECK_THROWS_AS(brute_force_relator_check(C{}, C{}), std::domain_error);
}

TEST_CASE("brute force residuals vanish on accepted points") {
    SurgerySpec spec(1);
    auto outcome = enumerate_solutions<R>(spec);
    for (const auto& pt : outcome.accepted) {
        CHECK(d(brute_force_relator_check(pt.s, pt.t)) < 1e-12);
        CHECK(d(brute_force_surgery_check(spec, pt.s, pt.t)) < 1e-8);
    }
}

TEST_CASE("verify_tables matches all n = 1 rows") {
    auto comp = compute_surgery<R>(1);
    auto rows = golden::load_rows(kDir, 1);
    auto sum = verify_tables(comp.classes, rows, 1e-3);
    CHECK(sum.ok());
    CHECK(sum.matches.size() == 3);
    CHECK(sum.unmatched_classes.empty());  // n = 1 has no suppressed rows
}

TEST_CASE("perturbing a golden u breaks its match") {
    auto comp = compute_surgery<R>(1);
    auto rows = golden::load_rows(kDir, 1);
    rows[0].u_re += 0.01;
    rows[0].u_im += 0.01;
    auto sum = verify_tables(comp.classes, rows, 1e-3);
    CHECK_FALSE(sum.all_rows_matched);
    REQUIRE(sum.unmatched_rows.size() == 1);
    CHECK(sum.unmatched_rows[0] == 0);
}

TEST_CASE("suppressed conjugates are accounted for at n = 2") {
    auto comp = compute_surgery<R>(2);
    auto rows = golden::load_rows(kDir, 2);
    auto sum = verify_tables(comp.classes, rows, 1e-3);
    CHECK(sum.ok());
    CHECK(sum.matches.size() == 6);
    CHECK(sum.unmatched_classes.size() == 1);  // the suppressed conjugate
    CHECK(sum.conjugates_accounted);
}

TEST_CASE("sigma verification for n = 1 against fixtures") {
    auto comp = compute_surgery<R>(1);
    auto gold = golden::load_sigma(kDir, 1);
    auto sum = verify_sigma(comp.sigma_poly, gold);
    CHECK(sum.all_ok);
    for (const auto& c : sum.coeffs) CHECK(c.ok);
}

TEST_CASE("sigma verification flags a tampered coefficient") {
    auto comp = compute_surgery<R>(1);
    auto gold = golden::load_sigma(kDir, 1);
    for (auto& c : gold.coeffs)
        if (c.degree == 1) c.value = 21;  // truth is 20
    auto sum = verify_sigma(comp.sigma_poly, gold);
    CHECK_FALSE(sum.all_ok);
}
