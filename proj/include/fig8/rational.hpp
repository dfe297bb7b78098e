#pragma once

#include "fig8/complex.hpp"

#include <utility>

namespace fig8 {

/// Result of trying to identify a numeric coefficient with a rational.
/// Failure is a value, not an error.
template <class R>
struct RoundResult {
    bool ok = false;
    BigRat value{};
    R residual{};  // max(|re - value|, |im|) / max(1, |re|)
};

namespace detail {

template <class R>
BigInt nearest_int(const R& x) {
    return floor(x + R(0.5)).template convert_to<BigInt>();
}

// Best rational approximation with denominator <= max_den, by walking the
// continued fraction of x.
template <class R>
BigRat best_rational(const R& x, const BigInt& max_den) {
    if (max_den <= 1) return BigRat(nearest_int(x), 1);
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    R v = x;
    for (int k = 0; k < 256; ++k) {
        BigInt a = floor(v).template convert_to<BigInt>();
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) {
            // largest admissible semiconvergent
            BigInt room = (q1 == 0) ? BigInt(0) : (max_den - q0) / q1;
            BigInt p2s = room * p1 + p0, q2s = room * q1 + q0;
            if (q2s >= 1) {
                R e1 = fabs(x - R(p1) / R(q1));
                R e2 = fabs(x - R(p2s) / R(q2s));
                return (q1 >= 1 && e1 <= e2) ? BigRat(p1, q1) : BigRat(p2s, q2s);
            }
            return BigRat(p1, q1);
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        R frac = v - R(a);
        if (frac == 0) break;
        v = 1 / frac;
    }
    return BigRat(p1, q1);
}

}  // namespace detail

/// Round a complex scalar to a rational with bounded denominator (default 1,
/// i.e. integer rounding).  Succeeds when the imaginary part and the
/// distance to the rational are both within tol * max(1, |re|).
template <class R>
RoundResult<R> round_to_rational(const Cx<R>& c, const R& tol, const BigInt& max_den = 1) {
    RoundResult<R> res;
    R scale = std::max(R(1), fabs(c.re));
    BigRat cand = detail::best_rational(c.re, max_den);
    R dist = fabs(c.re - R(numerator(cand)) / R(denominator(cand)));
    res.value = cand;
    res.residual = std::max(dist, fabs(c.im)) / scale;
    res.ok = (fabs(c.im) <= tol * scale) && (dist <= tol * scale);
    return res;
}

}  // namespace fig8
