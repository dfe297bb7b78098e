#pragma once

#include "fig8/numeric.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace fig8 {

/// Complex scalar over a real type R.  std::complex is specified only for
/// built-in floating types, so multiprecision work gets its own value type.
template <class R>
struct Cx {
    R re{};
    R im{};

    Cx() = default;
    Cx(R r) : re(std::move(r)) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cx(int r) : re(r) {}
    explicit Cx(double r) : re(r) {}

    static constexpr unsigned precision_bits = precision_bits_of<R>();

    bool is_zero() const { return re == 0 && im == 0; }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const Cx& a, const R& b) { return {a.re * b, a.im * b}; }
    friend Cx operator*(const R& a, const Cx& b) { return b * a; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Cx operator/(const Cx& a, const R& b) { return {a.re / b, a.im / b}; }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }
    Cx& operator/=(const Cx& o) { *this = *this / o; return *this; }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

template <class R> Cx<R> conj(const Cx<R>& z) { return {z.re, -z.im}; }
template <class R> R norm2(const Cx<R>& z) { return z.re * z.re + z.im * z.im; }
template <class R> R abs(const Cx<R>& z) {
    using std::sqrt;
    return sqrt(norm2(z));
}

/// Principal square root (branch cut along the negative real axis).
template <class R>
Cx<R> sqrt(const Cx<R>& z) {
    using std::sqrt;
    if (z.re == 0 && z.im == 0) return {};
    R m = abs(z);
    R w = sqrt((m + fabs(z.re)) / 2);
    if (z.re >= 0) return {w, z.im / (2 * w)};
    R iw = (z.im >= 0) ? w : -w;
    return {fabs(z.im) / (2 * w), iw};
}

template <class R>
Cx<R> inverse(const Cx<R>& z) {
    R d = norm2(z);
    return {z.re / d, -z.im / d};
}

template <class R>
Cx<R> polar(const R& radius, const R& angle) {
    return {radius * cos(angle), radius * sin(angle)};
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Cx<R>& z) {
    os << z.re;
    if (z.im != 0) os << (z.im > 0 ? " + " : " - ") << fabs(z.im) << " i";
    return os;
}

/// Render with `digits` significant digits, paper-table style ("a + b i").
template <class R>
std::string format_complex(const Cx<R>& z, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << z;
    return os.str();
}

}  // namespace fig8
