#pragma once

#include "fig8/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace fig8 {

namespace detail {

template <class C>
bool coeff_is_zero(const C& c) { return c == C{}; }

// Exact coefficient division; integers assert divisibility.
inline BigInt coeff_div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("inexact integer division in fraction-free elimination");
    return q;
}
inline BigRat coeff_div_exact(const BigRat& a, const BigRat& b) { return a / b; }
template <class R>
Cx<R> coeff_div_exact(const Cx<R>& a, const Cx<R>& b) { return a / b; }

// Coefficient conversion between the exact and floating layers.
template <class To, class From>
To coeff_cast(const From& c) {
    if constexpr (std::is_same_v<To, From>) {
        return c;
    } else if constexpr (std::is_same_v<From, BigInt> || std::is_same_v<From, BigRat>) {
        if constexpr (requires(To t) { t.re; }) {
            using R = decltype(To{}.re);
            return To(R(c));
        } else {
            return To(c);
        }
    } else {
        return To(c);
    }
}

}  // namespace detail

/// Dense univariate polynomial, coeffs[k] is the coefficient of x^k.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
template <class C>
struct Poly {
    std::vector<C> coeffs;

    Poly() = default;
    explicit Poly(std::vector<C> c) : coeffs(std::move(c)) { trim(); }
    static Poly constant(C c) {
        Poly p;
        if (!detail::coeff_is_zero(c)) p.coeffs.push_back(std::move(c));
        return p;
    }

    void trim() {
        while (!coeffs.empty() && detail::coeff_is_zero(coeffs.back())) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero poly
    const C& leading() const { return coeffs.back(); }
    C coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : C{};
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> c(std::max(a.coeffs.size(), b.coeffs.size()), C{});
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
        for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        std::vector<C> c(a.coeffs.size());
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = -a.coeffs[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> c(a.coeffs.size() + b.coeffs.size() - 1, C{});
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j)
                c[i + j] += a.coeffs[i] * b.coeffs[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const C& s) {
        std::vector<C> c(a.coeffs.size());
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i] * s;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }
};

/// Horner evaluation.
template <class C, class Z>
Z eval_poly(const Poly<C>& p, const Z& z) {
    Z acc{};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * z + detail::coeff_cast<Z>(*it);
    return acc;
}

template <class To, class From>
Poly<To> convert_poly(const Poly<From>& p) {
    std::vector<To> c(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] = detail::coeff_cast<To>(p.coeffs[i]);
    return Poly<To>(std::move(c));
}

template <class C>
Poly<C> derivative(const Poly<C>& p) {
    if (p.coeffs.size() <= 1) return {};
    std::vector<C> c(p.coeffs.size() - 1);
    for (size_t k = 1; k < p.coeffs.size(); ++k) c[k - 1] = p.coeffs[k] * C(static_cast<int>(k));
    return Poly<C>(std::move(c));
}

/// Exact division; throws if the division leaves a remainder.
template <class C>
Poly<C> divide_exact(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<C> rem = a.coeffs;
    std::vector<C> q(a.degree() - b.degree() + 1, C{});
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        C qk = detail::coeff_div_exact(rem[k + b.degree()], b.leading());
        q[k] = qk;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= qk * b.coeffs[j];
    }
    for (const C& r : rem)
        if (!detail::coeff_is_zero(r)) throw std::logic_error("inexact polynomial division");
    return Poly<C>(std::move(q));
}

/// Monic polynomial with the given roots, multiplied pairwise in a balanced
/// tree to limit floating-point error growth on long products.
template <class C>
Poly<C> poly_from_roots(const std::vector<C>& roots) {
    if (roots.empty()) return Poly<C>::constant(C(1));
    std::vector<Poly<C>> level;
    level.reserve(roots.size());
    for (const C& r : roots) level.push_back(Poly<C>({-r, C(1)}));
    while (level.size() > 1) {
        std::vector<Poly<C>> next;
        for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
        if (level.size() % 2) next.push_back(level.back());
        level.swap(next);
    }
    return level.front();
}

template <class R>
R infinity_norm(const Poly<Cx<R>>& p) {
    R m{};
    for (const auto& c : p.coeffs) m = std::max(m, abs(c));
    return m;
}

/// Laurent polynomial: coeffs[k] is the coefficient of x^(min_exp + k).
/// Normalized so both end coefficients are nonzero (empty means zero).
template <class C>
struct LaurentPoly {
    int min_exp = 0;
    std::vector<C> coeffs;

    LaurentPoly() = default;
    LaurentPoly(int e, std::vector<C> c) : min_exp(e), coeffs(std::move(c)) { normalize(); }
    static LaurentPoly monomial(C c, int e) { return LaurentPoly(e, {std::move(c)}); }
    static LaurentPoly constant(C c) { return monomial(std::move(c), 0); }

    void normalize() {
        size_t lead = 0;
        while (lead < coeffs.size() && detail::coeff_is_zero(coeffs[lead])) ++lead;
        if (lead == coeffs.size()) {
            coeffs.clear();
            min_exp = 0;
            return;
        }
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
        min_exp += static_cast<int>(lead);
        while (!coeffs.empty() && detail::coeff_is_zero(coeffs.back())) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int low_exp() const { return min_exp; }
    int high_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
    C coeff(int e) const {
        int k = e - min_exp;
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : C{};
    }

    /// Multiplication by x^k shifts exponents exactly.
    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.min_exp += k;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.min_exp, b.min_exp);
        int hi = std::max(a.high_exp(), b.high_exp());
        std::vector<C> c(static_cast<size_t>(hi - lo + 1), C{});
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[a.min_exp - lo + i] += a.coeffs[i];
        for (size_t i = 0; i < b.coeffs.size(); ++i) c[b.min_exp - lo + i] += b.coeffs[i];
        return LaurentPoly(lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> c(a.coeffs.size() + b.coeffs.size() - 1, C{});
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j)
                c[i + j] += a.coeffs[i] * b.coeffs[j];
        return LaurentPoly(a.min_exp + b.min_exp, std::move(c));
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_exp == b.min_exp && a.coeffs == b.coeffs;
    }
};

/// Evaluate at z != 0 (negative exponents use the inverse).
template <class C, class Z>
Z eval_laurent(const LaurentPoly<C>& p, const Z& z) {
    if (p.is_zero()) return Z{};
    Z acc{};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * z + detail::coeff_cast<Z>(*it);
    // multiply by z^min_exp
    Z zp = (p.min_exp >= 0) ? z : Z(1) / z;
    int k = std::abs(p.min_exp);
    while (k > 0) {
        if (k & 1) acc = acc * zp;
        k >>= 1;
        if (k) zp = zp * zp;
    }
    return acc;
}

/// Clear negative exponents: returns (p * x^shift, shift) with shift =
/// max(0, -low_exp), i.e. multiplication by the minimal power of x that
/// makes the result an ordinary polynomial.
template <class C>
std::pair<Poly<C>, int> clear_laurent(const LaurentPoly<C>& p) {
    if (p.is_zero()) return {Poly<C>{}, 0};
    int shift = std::max(0, -p.low_exp());
    std::vector<C> c(static_cast<size_t>(p.high_exp() + shift + 1), C{});
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[static_cast<size_t>(p.min_exp + shift) + i] = p.coeffs[i];
    return {Poly<C>(std::move(c)), shift};
}

template <class To, class From>
LaurentPoly<To> convert_laurent(const LaurentPoly<From>& p) {
    std::vector<To> c(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] = detail::coeff_cast<To>(p.coeffs[i]);
    return LaurentPoly<To>(p.min_exp, std::move(c));
}

/// Derivative of a Laurent polynomial (d/dx of sum c_e x^e).
template <class C>
LaurentPoly<C> derivative(const LaurentPoly<C>& p) {
    LaurentPoly<C> r;
    if (p.is_zero()) return r;
    std::vector<C> c(p.coeffs.size(), C{});
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        int e = p.min_exp + static_cast<int>(i);
        c[i] = p.coeffs[i] * C(e);
    }
    return LaurentPoly<C>(p.min_exp - 1, std::move(c));
}

}  // namespace fig8
