#pragma once

#include "fig8/complex.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

namespace fig8 {

/// 2x2 matrix over an arbitrary coefficient ring.
template <class C>
struct Mat2 {
    C a11{}, a12{}, a21{}, a22{};

    static Mat2 identity(const C& one) { return {one, C{}, C{}, one}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }
    friend Mat2 operator*(const Mat2& x, const C& c) {
        return {x.a11 * c, x.a12 * c, x.a21 * c, x.a22 * c};
    }

    C det() const { return a11 * a22 - a12 * a21; }
    C trace() const { return a11 + a22; }
    /// Inverse of a determinant-one matrix.
    Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }
};

template <class R>
R infinity_norm(const Mat2<Cx<R>>& m) {
    using std::max;
    return max(max(abs(m.a11), abs(m.a12)), max(abs(m.a21), abs(m.a22)));
}

template <class C>
Mat2<C> mat_pow(Mat2<C> base, unsigned n, const C& one) {
    Mat2<C> r = Mat2<C>::identity(one);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

// Generator words for the knot group presentation <x, y | wx = yw>,
// w = x y^-1 x^-1 y.  Letters: x, y generators; X, Y their inverses.
inline constexpr std::string_view kWordW = "xYXy";
inline constexpr std::string_view kWordWTilde = "XyxY";
// longitude l = w^-1 w~ = (y^-1 x y x^-1)(x^-1 y x y^-1)
inline constexpr std::string_view kWordLongitude = "YxyXXyxY";
inline constexpr std::string_view kWordRelatorLhs = "xYXyx";  // w x
inline constexpr std::string_view kWordRelatorRhs = "yxYXy";  // y w

/// Parametrized generator images: X = [[s,1],[0,1/s]], Y = [[s,0],[-t,1/s]].
template <class R>
Mat2<Cx<R>> generator_matrix(char g, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    const C one(R(1));
    const C si = inverse(s);
    switch (g) {
        case 'x': return {s, one, C{}, si};
        case 'X': return {si, -one, C{}, s};
        case 'y': return {s, C{}, -t, si};
        case 'Y': return {si, C{}, t, s};
        default: throw std::invalid_argument("unknown generator letter");
    }
}

/// Multiply out a word in {x, X, y, Y} left to right.
template <class R>
Mat2<Cx<R>> build_word(std::string_view word, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    if (s.is_zero()) throw std::domain_error("build_word: s must be nonzero");
    if (word.empty()) throw std::invalid_argument("build_word: empty word");
    Mat2<C> m = Mat2<C>::identity(C(R(1)));
    for (char g : word) m = m * generator_matrix(g, s, t);
    return m;
}

/// Matrix together with its partial derivatives in s and t; multiplication
/// follows the product rule, so word products carry exact Jacobians.
template <class R>
struct Mat2Jet {
    Mat2<Cx<R>> v, ds, dt;

    friend Mat2Jet operator*(const Mat2Jet& x, const Mat2Jet& y) {
        return {x.v * y.v, x.ds * y.v + x.v * y.ds, x.dt * y.v + x.v * y.dt};
    }
    static Mat2Jet identity() {
        return {Mat2<Cx<R>>::identity(Cx<R>(R(1))), {}, {}};
    }
    Mat2Jet adjugate() const { return {v.adjugate(), ds.adjugate(), dt.adjugate()}; }
};

template <class R>
Mat2Jet<R> generator_jet(char g, const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    const C one(R(1));
    const C si = inverse(s);
    const C dsi = -si * si;  // d(1/s)/ds
    switch (g) {
        case 'x': return {{s, one, C{}, si}, {one, C{}, C{}, dsi}, {}};
        case 'X': return {{si, -one, C{}, s}, {dsi, C{}, C{}, one}, {}};
        case 'y': return {{s, C{}, -t, si}, {one, C{}, C{}, dsi}, {C{}, C{}, -one, C{}}};
        case 'Y': return {{si, C{}, t, s}, {dsi, C{}, C{}, one}, {C{}, C{}, one, C{}}};
        default: throw std::invalid_argument("unknown generator letter");
    }
}

template <class R>
Mat2Jet<R> build_word_jet(std::string_view word, const Cx<R>& s, const Cx<R>& t) {
    Mat2Jet<R> m = Mat2Jet<R>::identity();
    for (char g : word) m = m * generator_jet(g, s, t);
    return m;
}

template <class R>
Mat2Jet<R> jet_pow(Mat2Jet<R> base, unsigned n) {
    Mat2Jet<R> r = Mat2Jet<R>::identity();
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

}  // namespace fig8
