#pragma once

#include "fig8/poly.hpp"
#include "fig8/roots.hpp"

#include <stdexcept>
#include <vector>

namespace fig8 {

/// Bivariate polynomial in (s, t): tc[k] is the coefficient of t^k, a
/// Laurent polynomial in s.
template <class C>
struct Bivar {
    std::vector<LaurentPoly<C>> tc;

    Bivar() = default;
    explicit Bivar(std::vector<LaurentPoly<C>> t) : tc(std::move(t)) { trim(); }

    void trim() {
        while (!tc.empty() && tc.back().is_zero()) tc.pop_back();
    }
    int tdeg() const { return static_cast<int>(tc.size()) - 1; }
    bool is_zero() const { return tc.empty(); }

    template <class Z>
    Z eval(const Z& s, const Z& t) const {
        Z acc{};
        for (auto it = tc.rbegin(); it != tc.rend(); ++it)
            acc = acc * t + eval_laurent(*it, s);
        return acc;
    }
};

template <class C>
LaurentPoly<C> laurent_divide_exact(const LaurentPoly<C>& a, const LaurentPoly<C>& b);

namespace detail {

// True when A = t^2 + p(s) t + q(s) with unit leading coefficient.
template <class C>
bool is_monic_quadratic(const Bivar<C>& a) {
    return a.tdeg() == 2 && a.tc[2] == LaurentPoly<C>::constant(C(1));
}

// Reduce g modulo the monic quadratic f = t^2 + p t + q, i.e. substitute
// t^2 -> -(p t + q) until deg_t < 2.  Stays inside the coefficient ring.
template <class C>
std::pair<LaurentPoly<C>, LaurentPoly<C>> reduce_mod_quadratic(const Bivar<C>& g,
                                                               const LaurentPoly<C>& p,
                                                               const LaurentPoly<C>& q) {
    std::vector<LaurentPoly<C>> c = g.tc;
    for (size_t k = c.size(); k-- > 2;) {
        LaurentPoly<C> lead = c[k];
        if (lead.is_zero()) { c.pop_back(); continue; }
        c[k - 1] = c[k - 1] - lead * p;
        c[k - 2] = c[k - 2] - lead * q;
        c.pop_back();
    }
    c.resize(2);
    return {c[1], c[0]};  // (a, b) with g == a t + b (mod f)
}

// Fraction-free (Bareiss) determinant over the Laurent polynomial ring.
template <class C>
LaurentPoly<C> bareiss_det(std::vector<std::vector<LaurentPoly<C>>> m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly<C>::constant(C(1));
    LaurentPoly<C> prev = LaurentPoly<C>::constant(C(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly<C> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = laurent_divide_exact(num, prev);
            }
        prev = m[k][k];
    }
    LaurentPoly<C> det = m[n - 1][n - 1];
    return (sign < 0) ? -det : det;
}

}  // namespace detail

/// Exact division in the Laurent ring (throws when not divisible).
template <class C>
LaurentPoly<C> laurent_divide_exact(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    if (b.is_zero()) throw std::invalid_argument("laurent division by zero");
    if (a.is_zero()) return {};
    auto [pa, sa] = clear_laurent(a.shifted(-a.low_exp()));
    auto [pb, sb] = clear_laurent(b.shifted(-b.low_exp()));
    Poly<C> q = divide_exact(pa, pb);
    return LaurentPoly<C>(a.low_exp() - b.low_exp(), std::move(q.coeffs));
}

/// Sylvester matrix of a and b with respect to t; entries are Laurent
/// polynomials in s.
template <class C>
std::vector<std::vector<LaurentPoly<C>>> sylvester_matrix(const Bivar<C>& a, const Bivar<C>& b) {
    const int da = a.tdeg(), db = b.tdeg();
    const size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<LaurentPoly<C>>> m(n, std::vector<LaurentPoly<C>>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.tc[static_cast<size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[static_cast<size_t>(db + r)][static_cast<size_t>(r + k)] = b.tc[static_cast<size_t>(db - k)];
    return m;
}

/// Resultant of a and b with respect to t, as a polynomial in s with
/// negative exponents cleared by the minimal power of s.  The s = 0 root
/// this clearing can introduce is the caller's to filter.
///
/// A monic-quadratic input takes a short algebraic route (reduce the other
/// argument, then multiply the two conjugate values); the general case is a
/// Sylvester determinant with fraction-free elimination.
template <class C>
Poly<C> resultant_t(const Bivar<C>& a, const Bivar<C>& b) {
    if (a.tdeg() <= 0 && b.tdeg() <= 0)
        throw std::invalid_argument("resultant_t: both inputs are constant in t");
    LaurentPoly<C> res;
    if (detail::is_monic_quadratic(a)) {
        // Res(f, g) = g(t+) g(t-) = b^2 - p a b + q a^2 for g == a t + b mod f
        auto [ga, gb] = detail::reduce_mod_quadratic(b, a.tc[1], a.tc[0]);
        res = gb * gb - a.tc[1] * ga * gb + a.tc[0] * ga * ga;
    } else if (detail::is_monic_quadratic(b)) {
        auto [ga, gb] = detail::reduce_mod_quadratic(a, b.tc[1], b.tc[0]);
        res = gb * gb - b.tc[1] * ga * gb + b.tc[0] * ga * ga;
        if ((a.tdeg() & 1) && (b.tdeg() & 1)) res = -res;  // (-1)^(da db)
    } else {
        res = detail::bareiss_det(sylvester_matrix(a, b));
    }
    return clear_laurent(res).first;
}

/// Direct numeric Sylvester determinant at a single point s0 (Gaussian
/// elimination with partial pivoting).  Independent check for resultant_t.
template <class R>
Cx<R> sylvester_det_at(const Bivar<Cx<R>>& a, const Bivar<Cx<R>>& b, const Cx<R>& s0) {
    auto sym = sylvester_matrix(a, b);
    const size_t n = sym.size();
    std::vector<std::vector<Cx<R>>> m(n, std::vector<Cx<R>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = sym[i][j].is_zero() ? Cx<R>{} : eval_laurent(sym[i][j], s0);
    Cx<R> det(R(1));
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (norm2(m[i][k]) > norm2(m[piv][k])) piv = i;
        if (m[piv][k].is_zero()) return Cx<R>{};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            Cx<R> fac = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= fac * m[k][j];
        }
    }
    return det;
}

}  // namespace fig8
