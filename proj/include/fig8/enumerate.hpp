#pragma once

#include "fig8/repvariety.hpp"
#include "fig8/resultant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fig8 {

// ---------------------------------------------------------------------------
// Exact elimination layer: the surgery equations live in the quotient ring
// Z[s, 1/s][t] / (f) with f = t^2 + c (t + 1), c = 3 - s^-2 - s^2.  Every
// element reduces to a(s) t + b(s), so longitude powers stay small.
// ---------------------------------------------------------------------------

namespace exact {

using ZL = LaurentPoly<BigInt>;

inline const ZL& defining_c() {
    static const ZL c(-2, {BigInt(-1), BigInt(0), BigInt(3), BigInt(0), BigInt(-1)});
    return c;
}

/// Element a(s) t + b(s) of the quotient ring.
struct QuotElem {
    ZL a, b;

    QuotElem() = default;
    QuotElem(ZL a_, ZL b_) : a(std::move(a_)), b(std::move(b_)) {}
    static QuotElem constant(BigInt v) { return {ZL{}, ZL::constant(std::move(v))}; }
    static QuotElem monomial(BigInt v, int e) { return {ZL{}, ZL::monomial(std::move(v), e)}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend QuotElem operator+(const QuotElem& x, const QuotElem& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuotElem operator-(const QuotElem& x, const QuotElem& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuotElem operator-(const QuotElem& x) { return {-x.a, -x.b}; }
    friend QuotElem operator*(const QuotElem& x, const QuotElem& y) {
        // (a1 t + b1)(a2 t + b2) with t^2 = -c t - c
        ZL aa = x.a * y.a;
        ZL caa = defining_c() * aa;
        return {x.a * y.b + y.a * x.b - caa, x.b * y.b - caa};
    }
    QuotElem& operator+=(const QuotElem& o) { *this = *this + o; return *this; }
    QuotElem& operator*=(const QuotElem& o) { *this = *this * o; return *this; }
    friend bool operator==(const QuotElem& x, const QuotElem& y) { return x.a == y.a && x.b == y.b; }
};

inline Mat2<QuotElem> generator_quot(char g) {
    QuotElem zero;
    QuotElem one = QuotElem::constant(1);
    QuotElem s = QuotElem::monomial(1, 1);
    QuotElem si = QuotElem::monomial(1, -1);
    QuotElem t{ZL::constant(BigInt(1)), ZL{}};
    QuotElem mt{ZL::constant(BigInt(-1)), ZL{}};
    switch (g) {
        case 'x': return {s, one, zero, si};
        case 'X': return {si, -one, zero, s};
        case 'y': return {s, zero, mt, si};
        case 'Y': return {si, zero, t, s};
        default: throw std::invalid_argument("unknown generator letter");
    }
}

inline Mat2<QuotElem> word_quot(std::string_view word) {
    Mat2<QuotElem> m = Mat2<QuotElem>::identity(QuotElem::constant(1));
    for (char g : word) m = m * generator_quot(g);
    return m;
}

/// The longitude image in the quotient ring.  Computed once; the structural
/// facts L21 = 0 and det L = 1 hold exactly and are verified here.
inline const Mat2<QuotElem>& longitude_quot() {
    static const Mat2<QuotElem> L = [] {
        Mat2<QuotElem> m = word_quot(kWordLongitude);
        if (!m.a21.is_zero())
            throw std::logic_error("longitude is not upper triangular in the quotient ring");
        if (!(m.det() == QuotElem::constant(1)))
            throw std::logic_error("longitude determinant is not 1 in the quotient ring");
        return m;
    }();
    return L;
}

inline Bivar<BigInt> to_bivar(const QuotElem& q) { return Bivar<BigInt>({q.b, q.a}); }

inline Bivar<BigInt> f_bivar() {
    return Bivar<BigInt>({defining_c(), defining_c(), ZL::constant(BigInt(1))});
}

struct Elimination {
    Poly<BigInt> p11;        // deflated s-polynomial whose roots seed the search
    Bivar<BigInt> d11, d12;  // reduced surgery entries, for the record
    int zeros_stripped = 0;  // s^k factor removed after Laurent clearing
    int deflated_at_one = 0;
    int deflated_at_minus_one = 0;
};

inline Poly<BigInt> strip_valuation(Poly<BigInt> p, int& count) {
    size_t k = 0;
    while (k < p.coeffs.size() && p.coeffs[k] == 0) ++k;
    count = static_cast<int>(k);
    if (k) p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<long>(k));
    return p;
}

inline BigInt eval_at_pm1(const Poly<BigInt>& p, int r) {
    BigInt acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * r + *it;
    return acc;
}

inline Poly<BigInt> deflate_root(const Poly<BigInt>& p, int r) {
    // synthetic division by (s - r), exact
    std::vector<BigInt> out(p.coeffs.size() - 1);
    BigInt acc = 0;
    for (size_t k = p.coeffs.size(); k-- > 1;) {
        acc = p.coeffs[k] + BigInt(r) * acc;
        out[k - 1] = acc;
    }
    return Poly<BigInt>(std::move(out));
}

/// Eliminate t between f and the surgery entries for coefficient n.
/// The s = +-1 roots the resultant picks up (unit-circle degeneration) are
/// deflated exactly and handed back to the caller as ordinary candidates.
inline Elimination eliminate(int n) {
    const Mat2<QuotElem>& L = longitude_quot();
    const Mat2<QuotElem> Linv{L.a22, -L.a12, -L.a21, L.a11};
    const unsigned k = static_cast<unsigned>(n > 0 ? n : -n);
    const Mat2<QuotElem> M = mat_pow(n > 0 ? Linv : L, k, QuotElem::constant(1));

    Elimination e;
    QuotElem d11 = QuotElem::monomial(1, 1) - M.a11;
    QuotElem d12 = QuotElem::constant(1) - M.a12;
    e.d11 = to_bivar(d11);
    e.d12 = to_bivar(d12);

    Poly<BigInt> p = resultant_t(f_bivar(), e.d11);
    p = strip_valuation(std::move(p), e.zeros_stripped);
    while (p.degree() > 0 && eval_at_pm1(p, 1) == 0) {
        p = deflate_root(p, 1);
        ++e.deflated_at_one;
    }
    while (p.degree() > 0 && eval_at_pm1(p, -1) == 0) {
        p = deflate_root(p, -1);
        ++e.deflated_at_minus_one;
    }
    e.p11 = std::move(p);
    return e;
}

}  // namespace exact

// ---------------------------------------------------------------------------
// Numeric layer: root candidates, Newton polishing, residual validation.
// ---------------------------------------------------------------------------

template <class R>
struct Residuals {
    R f_abs{};    // |f(s, t)|
    R relator{};  // ||W X - Y W||_inf
    R surgery{};  // ||X L^n - I||_inf
};

template <class R>
struct RepPoint {
    int n = 0;
    Cx<R> s, t;
    Branch branch = Branch::plus;
    Residuals<R> residuals;
    bool flagged = false;  // passed only the relaxed (near-threshold) gate
};

enum class Classification { su2, sl2r, complex_only };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::su2: return "SU2";
        case Classification::sl2r: return "SL2R";
        default: return "complex";
    }
}

template <class R>
struct RepClass {
    Cx<R> u, kappa;            // trace coordinates (tr X, tr X Y^-1) = (u, 2 - t)
    Cx<R> s, t;                // canonical member, |s| <= 1
    std::vector<RepPoint<R>> members;
    Classification classification = Classification::complex_only;
    bool ambiguous = false;    // SU2 and SL2R tests both passed within tol
    bool su2_form_ok = false;  // positive-definite invariant Hermitian form found
    int conjugate_partner = -1;
};

template <class R>
struct EnumerateOptions {
    R tol_residual = R("1e-9");
    int max_newton_iters = 60;
    int root_polish_iters = 3;
    int root_max_iters = 400;
};

namespace detail {

// Direct surgery matrix D = X - L^-n at an arbitrary (s, t): the longitude
// is the full word product (not the on-variety triangular form), so this is
// an honest bivariate function suitable for 2-variable Newton.
template <class R>
Mat2<Cx<R>> surgery_matrix_direct(int n, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    const Mat2<C> L = build_word(kWordLongitude, s, t);
    const unsigned k = static_cast<unsigned>(n > 0 ? n : -n);
    const Mat2<C> M = mat_pow(n > 0 ? L.adjugate() : L, k, C(R(1)));
    Mat2<C> X = generator_matrix('x', s, t);
    return X - M;
}

template <class R>
struct SystemJet {
    Cx<R> f, f_s, f_t;
    Cx<R> g, g_s, g_t;  // g = d11 of the direct surgery matrix
};

template <class R>
SystemJet<R> system_jet(int n, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    const C one(R(1));
    const C s2 = s * s;
    const C is = inverse(s);
    const C is2 = is * is;
    const C is3 = is2 * is;
    SystemJet<R> out;
    out.f = f_of(s, t);
    out.f_s = C(R(2)) * is3 - C(R(2)) * s + C(R(2)) * t * is3 - C(R(2)) * s * t;
    out.f_t = C(R(3)) - is2 - s2 + C(R(2)) * t;

    Mat2Jet<R> L = build_word_jet(kWordLongitude, s, t);
    const unsigned k = static_cast<unsigned>(n > 0 ? n : -n);
    Mat2Jet<R> M = jet_pow(n > 0 ? L.adjugate() : L, k);
    out.g = s - M.v.a11;
    out.g_s = one - M.ds.a11;
    out.g_t = -M.dt.a11;
    return out;
}

// Newton iteration on (f, d11); returns the polished point or nothing.
template <class R>
std::optional<std::pair<Cx<R>, Cx<R>>> polish(int n, Cx<R> s, Cx<R> t,
                                              const EnumerateOptions<R>& opt) {
    using C = Cx<R>;
    const R step_tol = ldexp(R(1), -static_cast<int>(precision_bits_of<R>()) + 8);
    for (int it = 0; it < opt.max_newton_iters; ++it) {
        if (abs(s) < R("1e-4") || abs(s) > R("1e4")) return std::nullopt;
        SystemJet<R> J = system_jet(n, s, t);
        C det = J.f_s * J.g_t - J.f_t * J.g_s;
        if (det.is_zero()) return std::nullopt;
        C ds = (J.f * J.g_t - J.f_t * J.g) / det;
        C dt = (J.f_s * J.g - J.f * J.g_s) / det;
        s -= ds;
        t -= dt;
        if (abs(ds) + abs(dt) <= step_tol * (1 + abs(s) + abs(t)))
            return std::make_pair(s, t);
    }
    return std::nullopt;
}

}  // namespace detail

/// Relator residual ||W X - Y W||_inf by explicit word products.
template <class R>
R relator_residual(const Cx<R>& s, const Cx<R>& t) {
    Mat2<Cx<R>> lhs = build_word(kWordRelatorLhs, s, t);
    Mat2<Cx<R>> rhs = build_word(kWordRelatorRhs, s, t);
    return infinity_norm(lhs - rhs);
}

/// Surgery residual ||X L^n - I||_inf by repeated multiplication of the
/// longitude word matrix (no closed forms, no power recursion).
template <class R>
R surgery_residual(int n, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    Mat2<C> L = build_word(kWordLongitude, s, t);
    if (n < 0) L = L.adjugate();
    Mat2<C> acc = generator_matrix('x', s, t);
    for (int k = std::abs(n); k > 0; --k) acc = acc * L;
    return infinity_norm(acc - Mat2<C>::identity(C(R(1))));
}

template <class R>
struct EnumerationOutcome {
    std::vector<RepPoint<R>> accepted;
    std::vector<RepPoint<R>> flagged;
    int elimination_degree = 0;
};

/// All solutions of the surgery system for the given coefficient: eliminate
/// t by resultant, root-find the s-polynomial, match branches by residual,
/// polish, and re-validate every candidate against the full system.
template <class R>
EnumerationOutcome<R> enumerate_solutions(const SurgerySpec& spec,
                                          const EnumerateOptions<R>& opt = {}) {
    using C = Cx<R>;
    const exact::Elimination elim = exact::eliminate(spec.n);
    EnumerationOutcome<R> out;
    out.elimination_degree = elim.p11.degree();

    Poly<C> p = convert_poly<C>(elim.p11);
    std::vector<C> candidates = poly_roots(p, opt.root_polish_iters, opt.root_max_iters);
    // unit-circle degenerations deflated exactly are still re-checked
    if (elim.deflated_at_one) candidates.push_back(C(R(1)));
    if (elim.deflated_at_minus_one) candidates.push_back(C(R(-1)));

    const R prefilter(R("1e-2"));
    const R flag_band = opt.tol_residual * R(1000);
    std::vector<RepPoint<R>> found;
    for (const C& s0 : candidates) {
        if (abs(s0) < R("1e-6")) continue;  // artifacts of Laurent clearing
        for (Branch b : kBothBranches) {
            C t0 = t_branch(s0, b);
            Mat2<C> D0 = detail::surgery_matrix_direct(spec.n, s0, t0);
            if (abs(D0.a11) > prefilter || abs(D0.a12) > prefilter) continue;
            auto polished = detail::polish(spec.n, s0, t0, opt);
            if (!polished) continue;
            auto [sp, tp] = *polished;
            // branch bookkeeping: the polished t may sit on either root
            Branch bp = (abs(t_branch(sp, Branch::plus) - tp) <=
                         abs(t_branch(sp, Branch::minus) - tp))
                            ? Branch::plus
                            : Branch::minus;
            RepPoint<R> pt;
            pt.n = spec.n;
            pt.s = sp;
            pt.t = tp;
            pt.branch = bp;
            pt.residuals.f_abs = abs(f_of(sp, tp));
            pt.residuals.relator = relator_residual(sp, tp);
            pt.residuals.surgery = surgery_residual(spec.n, sp, tp);
            Mat2<C> D = detail::surgery_matrix_direct(spec.n, sp, tp);
            R dmax = std::max({abs(D.a11), abs(D.a12), abs(D.a22)});
            R worst = std::max({pt.residuals.f_abs, pt.residuals.relator, dmax});
            bool strict = worst <= opt.tol_residual &&
                          pt.residuals.surgery <= opt.tol_residual * 10;
            bool relaxed = worst <= flag_band && pt.residuals.surgery <= flag_band * 10;
            if (!strict && !relaxed) continue;
            pt.flagged = !strict;
            auto& bucket = strict ? found : out.flagged;
            bool dup = false;
            for (const auto& q : bucket)
                if (abs(q.s - pt.s) <= R("1e-8") * (1 + abs(pt.s)) &&
                    abs(q.t - pt.t) <= R("1e-8") * (1 + abs(pt.t))) {
                    dup = true;
                    break;
                }
            if (!dup) bucket.push_back(std::move(pt));
        }
    }
    out.accepted = std::move(found);
    if (out.accepted.empty())
        throw std::runtime_error("enumeration found no solutions for n = " +
                                 std::to_string(spec.n) + "; verification failure");
    return out;
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

namespace detail {

/// Solve for an invariant Hermitian form H with X^H H X = H, Y^H H Y = H
/// and test positive definiteness.  An irreducible pair is SU(2)-conjugate
/// exactly when such a definite form exists.
template <class R>
bool has_definite_invariant_form(const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    const Mat2<C> gens[2] = {generator_matrix('x', s, t), generator_matrix('y', s, t)};
    // Hermitian basis: H0=[[1,0],[0,0]], H1=[[0,1],[1,0]], H2=[[0,i],[-i,0]], H3=[[0,0],[0,1]]
    auto basis = [](int e) -> Mat2<C> {
        switch (e) {
            case 0: return {C(R(1)), C{}, C{}, C{}};
            case 1: return {C{}, C(R(1)), C(R(1)), C{}};
            case 2: return {C{}, C(R(0), R(1)), C(R(0), R(-1)), C{}};
            default: return {C{}, C{}, C{}, C(R(1))};
        }
    };
    auto herm_transpose = [](const Mat2<C>& m) -> Mat2<C> {
        return {conj(m.a11), conj(m.a21), conj(m.a12), conj(m.a22)};
    };
    // 8x4 real system: rows = (re E11, re E12, im E12, re E22) per generator
    R A[8][4];
    for (int g = 0; g < 2; ++g) {
        Mat2<C> mh = herm_transpose(gens[g]);
        for (int e = 0; e < 4; ++e) {
            Mat2<C> E = mh * basis(e) * gens[g] - basis(e);
            A[4 * g + 0][e] = E.a11.re;
            A[4 * g + 1][e] = E.a12.re;
            A[4 * g + 2][e] = E.a12.im;
            A[4 * g + 3][e] = E.a22.re;
        }
    }
    // row echelon with partial pivoting; expect rank 3 for an irreducible pair
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 4 && row < 3; ++col) {
        int piv = -1;
        R best{};
        for (int i = row; i < 8; ++i)
            if (fabs(A[i][col]) > best) { best = fabs(A[i][col]); piv = i; }
        if (piv < 0 || best < R("1e-20")) continue;
        for (int j = 0; j < 4; ++j) std::swap(A[row][j], A[piv][j]);
        for (int i = 0; i < 8; ++i) {
            if (i == row) continue;
            R f = A[i][col] / A[row][col];
            for (int j = 0; j < 4; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row != 3) return false;  // rank defect: no 1-dimensional solution line
    int free_col = 0 + 1 + 2 + 3;
    for (int r = 0; r < 3; ++r) free_col -= pivot_col[r];
    R h[4];
    h[free_col] = R(1);
    for (int r = 0; r < 3; ++r)
        h[pivot_col[r]] = -A[r][free_col] / A[r][pivot_col[r]];
    if (h[0] + h[3] < 0)
        for (auto& v : h) v = -v;
    return h[0] > 0 && h[3] > 0 && h[0] * h[3] - h[1] * h[1] - h[2] * h[2] > 0;
}

}  // namespace detail

/// Group accepted points into conjugacy classes by the trace coordinates
/// (u, 2 - t); the canonical member has |s| <= 1 (and Im s >= 0 on the unit
/// circle, mirroring the table convention).
template <class R>
std::vector<RepClass<R>> dedup_classes(const std::vector<RepPoint<R>>& points,
                                       const R& tol_dedup = R("1e-9")) {
    using C = Cx<R>;
    std::vector<RepClass<R>> classes;
    if (points.empty()) return classes;
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i].n != points[0].n)
            throw std::invalid_argument("dedup_classes: mixed surgery coefficients");

    for (const auto& pt : points) {
        C u = pt.s + inverse(pt.s);
        C kappa = C(R(2)) - pt.t;
        bool placed = false;
        for (auto& cl : classes) {
            if (abs(cl.u - u) <= tol_dedup * (1 + abs(u)) &&
                abs(cl.kappa - kappa) <= tol_dedup * (1 + abs(kappa))) {
                cl.members.push_back(pt);
                placed = true;
                break;
            }
        }
        if (!placed) {
            RepClass<R> cl;
            cl.u = u;
            cl.kappa = kappa;
            cl.members.push_back(pt);
            classes.push_back(std::move(cl));
        }
    }
    // canonical representative
    for (auto& cl : classes) {
        const RepPoint<R>* pick = &cl.members.front();
        bool unit_circle = false;
        for (const auto& m : cl.members)
            if (fabs(abs(m.s) - 1) <= R("1e-9")) unit_circle = true;
        if (unit_circle) {
            for (const auto& m : cl.members)
                if (m.s.im >= 0) { pick = &m; break; }
        } else {
            for (const auto& m : cl.members)
                if (abs(m.s) < abs(pick->s)) pick = &m;
        }
        cl.s = pick->s;
        cl.t = pick->t;
    }
    // conjugate partners
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = 0; j < classes.size(); ++j) {
            if (i == j) continue;
            if (abs(classes[i].u - conj(classes[j].u)) <= tol_dedup * (1 + abs(classes[i].u)) &&
                abs(classes[i].kappa - conj(classes[j].kappa)) <=
                    tol_dedup * (1 + abs(classes[i].kappa))) {
                classes[i].conjugate_partner = static_cast<int>(j);
                break;
            }
        }
    }
    return classes;
}

/// SU(2) / SL(2,R) / complex classification; on a tie SU(2) wins and the
/// class is flagged for review.
template <class R>
void classify(RepClass<R>& cls, const R& tol) {
    bool su2 = fabs(abs(cls.s) - 1) < tol && fabs(cls.t.im) < tol && fabs(cls.u.im) < tol &&
               fabs(cls.u.re) < 2;
    bool sl2r = fabs(cls.s.im) < tol && fabs(cls.t.im) < tol;
    cls.ambiguous = su2 && sl2r;
    if (su2) {
        cls.classification = Classification::su2;
        cls.su2_form_ok = detail::has_definite_invariant_form(cls.s, cls.t);
    } else if (sl2r) {
        cls.classification = Classification::sl2r;
    } else {
        cls.classification = Classification::complex_only;
    }
}

}  // namespace fig8
