#pragma once

#include "fig8/enumerate.hpp"
#include "fig8/rational.hpp"
#include "fig8/roots.hpp"

#include <vector>

namespace fig8 {

/// Thrown when the torsion formula is evaluated inside the singular locus
/// u = 0 or u^2 = 5 (the formula presupposes an acyclic representation).
struct SingularTorsionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Reidemeister torsion in terms of the meridian trace:
/// tau(u) = 2 (u - 1) / (u^2 (u^2 - 5)).
template <class R>
Cx<R> tau(const Cx<R>& u, const R& singular_tol = R("1e-12")) {
    using C = Cx<R>;
    const C u2 = u * u;
    if (abs(u) < singular_tol) throw SingularTorsionError("torsion undefined: u ~ 0");
    if (abs(u2 - C(R(5))) < singular_tol * (1 + abs(u2)))
        throw SingularTorsionError("torsion undefined: u^2 ~ 5");
    return C(R(2)) * (u - C(R(1))) / (u2 * (u2 - C(R(5))));
}

template <class R>
struct TorsionValue {
    Cx<R> value;
    bool acyclic = false;  // tau defined and nonzero
    size_t class_index = 0;
    std::string note;  // set when tau is singular or vanishes
};

/// Torsion of every class; classes where tau is singular or zero are
/// excluded from R' but reported with a note.
template <class R>
std::vector<TorsionValue<R>> torsion_spectrum(const std::vector<RepClass<R>>& classes,
                                              const R& zero_tol = R("1e-10"),
                                              const R& singular_tol = R("1e-12")) {
    std::vector<TorsionValue<R>> out;
    out.reserve(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        TorsionValue<R> tv;
        tv.class_index = i;
        try {
            tv.value = tau(classes[i].u, singular_tol);
            tv.acyclic = abs(tv.value) > zero_tol;
            if (!tv.acyclic) tv.note = "torsion vanishes";
        } catch (const SingularTorsionError& e) {
            tv.acyclic = false;
            tv.note = e.what();
        }
        out.push_back(std::move(tv));
    }
    return out;
}

/// The torsion polynomial: monic product of (t - tau) over the acyclic
/// classes, with near-real coefficients snapped to rationals.
template <class R>
struct TorsionPolynomial {
    int n = 0;
    Poly<Cx<R>> complex_coeffs;           // ascending, monic
    std::vector<RoundResult<R>> rounded;  // one per coefficient
    R rounding_residual{};                // worst relative residual
    int degree = 0;
    bool all_rounded = true;
};

template <class R>
TorsionPolynomial<R> sigma(int n, const std::vector<TorsionValue<R>>& spectrum, const R& tol,
                           const BigInt& max_denominator = 1) {
    using C = Cx<R>;
    TorsionPolynomial<R> out;
    out.n = n;
    std::vector<C> roots;
    for (const auto& tv : spectrum)
        if (tv.acyclic) roots.push_back(tv.value);
    out.degree = static_cast<int>(roots.size());
    out.complex_coeffs = poly_from_roots(roots);  // 1 for the empty spectrum
    for (auto& c : out.complex_coeffs.coeffs)
        if (fabs(c.im) <= tol * std::max(R(1), fabs(c.re))) c.im = R(0);
    for (const auto& c : out.complex_coeffs.coeffs) {
        RoundResult<R> r = round_to_rational(c, tol, max_denominator);
        out.rounding_residual = std::max(out.rounding_residual, r.residual);
        out.all_rounded = out.all_rounded && r.ok;
        out.rounded.push_back(std::move(r));
    }
    return out;
}

/// Casson-type counts: lambda = -n, lambda_SL(2,C) = 4n - 1, checked
/// against the observed class counts.
struct CassonReport {
    int n = 0;
    long lambda = 0;
    long lambda_sl2c = 0;
    long observed_su2 = 0;
    long observed_total = 0;
    bool consistent = false;
};

template <class R>
CassonReport casson(int n, const std::vector<RepClass<R>>& classes) {
    if (n == 0) throw std::invalid_argument("casson: n must be nonzero");
    CassonReport rep;
    rep.n = n;
    rep.lambda = -static_cast<long>(n);
    rep.lambda_sl2c = 4L * n - 1;
    rep.observed_total = static_cast<long>(classes.size());
    for (const auto& c : classes)
        if (c.classification == Classification::su2) ++rep.observed_su2;
    rep.consistent = (rep.observed_su2 == 2 * std::abs(rep.lambda)) &&
                     (rep.observed_total == std::abs(rep.lambda_sl2c));
    return rep;
}

/// Full per-n computation used by comparisons, tests and the CLI.
template <class R>
struct SurgeryComputation {
    SurgerySpec spec;
    EnumerationOutcome<R> outcome;
    std::vector<RepClass<R>> classes;
    std::vector<TorsionValue<R>> spectrum;
    TorsionPolynomial<R> sigma_poly;
    CassonReport casson_report;
};

template <class R>
struct ComputeOptions {
    EnumerateOptions<R> enumerate;
    R tol_dedup = R("1e-9");
    R tol_class = R("1e-9");
    R tol_round = R("1e-6");
};

template <class R>
SurgeryComputation<R> compute_surgery(int n, const ComputeOptions<R>& opt = {}) {
    SurgerySpec spec(n);
    SurgeryComputation<R> c{spec, enumerate_solutions<R>(spec, opt.enumerate), {}, {}, {}, {}};
    c.classes = dedup_classes(c.outcome.accepted, opt.tol_dedup);
    for (auto& cl : c.classes) classify(cl, opt.tol_class);
    // paper order: SU(2) block first, then the rest, each by increasing Re u
    std::sort(c.classes.begin(), c.classes.end(), [](const RepClass<R>& a, const RepClass<R>& b) {
        bool sa = a.classification == Classification::su2;
        bool sb = b.classification == Classification::su2;
        if (sa != sb) return sa;
        if (a.u.re != b.u.re) return a.u.re < b.u.re;
        return a.u.im < b.u.im;
    });
    // re-link conjugate partners after sorting
    for (size_t i = 0; i < c.classes.size(); ++i) {
        c.classes[i].conjugate_partner = -1;
        for (size_t j = 0; j < c.classes.size(); ++j) {
            if (i == j) continue;
            R tol = opt.tol_dedup;
            if (abs(c.classes[i].u - conj(c.classes[j].u)) <= tol * (1 + abs(c.classes[i].u)) &&
                abs(c.classes[i].kappa - conj(c.classes[j].kappa)) <=
                    tol * (1 + abs(c.classes[i].kappa))) {
                c.classes[i].conjugate_partner = static_cast<int>(j);
                break;
            }
        }
    }
    c.spectrum = torsion_spectrum(c.classes);
    c.sigma_poly = sigma(n, c.spectrum, opt.tol_round);
    c.casson_report = casson(n, c.classes);
    return c;
}

/// sigma_0 = 1 by convention; no enumeration behind it.
template <class R>
TorsionPolynomial<R> sigma_zero() {
    TorsionPolynomial<R> out;
    out.n = 0;
    out.complex_coeffs = Poly<Cx<R>>::constant(Cx<R>(R(1)));
    out.rounded.push_back(round_to_rational(Cx<R>(R(1)), R("1e-6")));
    return out;
}

/// Compare the rounded sigma coefficients for +n and -n.  The identity is
/// asserted by tests only for n = 1; other n are informational.
template <class R>
bool sigma_symmetry_check(int n_pos, const ComputeOptions<R>& opt = {}) {
    if (n_pos < 1) throw std::invalid_argument("sigma_symmetry_check requires n >= 1");
    auto plus = compute_surgery<R>(n_pos, opt);
    auto minus = compute_surgery<R>(-n_pos, opt);
    const auto& a = plus.sigma_poly;
    const auto& b = minus.sigma_poly;
    if (a.degree != b.degree) return false;
    if (a.all_rounded && b.all_rounded) {
        for (size_t i = 0; i < a.rounded.size(); ++i)
            if (a.rounded[i].value != b.rounded[i].value) return false;
        return true;
    }
    for (size_t i = 0; i < a.complex_coeffs.coeffs.size(); ++i) {
        Cx<R> d = a.complex_coeffs.coeffs[i] - b.complex_coeffs.coeffs[i];
        if (abs(d) > R("1e-6") * (1 + abs(a.complex_coeffs.coeffs[i]))) return false;
    }
    return true;
}

}  // namespace fig8
