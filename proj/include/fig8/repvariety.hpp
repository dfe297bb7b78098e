#pragma once

#include "fig8/words.hpp"

#include <array>
#include <stdexcept>

namespace fig8 {

/// 1/n Dehn surgery coefficient; n = 0 (the 3-sphere) is excluded.
struct SurgerySpec {
    int n;
    explicit SurgerySpec(int n_) : n(n_) {
        if (n == 0) throw std::invalid_argument("surgery coefficient n must be nonzero");
    }
};

/// Which root of the defining quadratic in t the point lives on.
enum class Branch { plus, minus };

inline constexpr std::array<Branch, 2> kBothBranches{Branch::plus, Branch::minus};

template <class R>
Cx<R> branch_sign(Branch b) {
    return Cx<R>(R(b == Branch::plus ? 1 : -1));
}

/// Defining equation of the irreducible character variety of the knot
/// exterior: f(s,t) = 3 - 1/s^2 - s^2 + 3t - t/s^2 - s^2 t + t^2.
/// Algebraically equal to t^2 + (5 - u^2)(t + 1) with u = s + 1/s.
template <class R>
Cx<R> f_of(const Cx<R>& s, const Cx<R>& t) {
    using C = Cx<R>;
    if (s.is_zero()) throw std::domain_error("f_of: s must be nonzero");
    const C s2 = s * s;
    const C is2 = inverse(s2);
    return C(R(3)) - is2 - s2 + C(R(3)) * t - t * is2 - s2 * t + t * t;
}

/// Discriminant under the root: 1 - 2s^2 - s^4 - 2s^6 + s^8.
template <class R>
Cx<R> discriminant(const Cx<R>& s) {
    using C = Cx<R>;
    const C s2 = s * s;
    const C s4 = s2 * s2;
    return C(R(1)) - C(R(2)) * s2 - s4 - C(R(2)) * s2 * s4 + s4 * s4;
}

/// The two solutions of f(s, .) = 0:
/// t = (1 - 3s^2 + s^4 +- sqrt(Delta)) / (2 s^2), principal square root.
template <class R>
Cx<R> t_branch(const Cx<R>& s, Branch b) {
    using C = Cx<R>;
    if (s.is_zero()) throw std::domain_error("t_branch: s must be nonzero");
    const C s2 = s * s;
    const C root = sqrt(discriminant(s));
    return (C(R(1)) - C(R(3)) * s2 + s2 * s2 + branch_sign<R>(b) * root) / (C(R(2)) * s2);
}

/// Longitude matrix evaluated from its closed-form entries; upper
/// triangular with unit determinant, the +- tied to the t branch.
template <class R>
Mat2<Cx<R>> longitude_closed_form(const Cx<R>& s, Branch b) {
    using C = Cx<R>;
    if (s.is_zero()) throw std::domain_error("longitude_closed_form: s must be nonzero");
    const C s2 = s * s;
    const C s4 = s2 * s2;
    const C is2 = inverse(s2);
    const C is4 = is2 * is2;
    const C half(R(0.5));
    const C root = sqrt(discriminant(s));
    const C sig = branch_sign<R>(b);
    const C a = C(R(-1)) + half * is4 - half * is2 - half * s2 + half * s4;
    const C g = half * root - half * root * is4;
    const C offdiag = sig * root * (inverse(s2 * s) + inverse(s));
    return {a + sig * g, offdiag, C{}, a - sig * g};
}

/// tr(L); independent of the branch.
template <class R>
Cx<R> longitude_trace(const Cx<R>& s) {
    using C = Cx<R>;
    const C s2 = s * s;
    const C s4 = s2 * s2;
    return C(R(-2)) + inverse(s4) - inverse(s2) - s2 + s4;
}

namespace detail {

template <class R>
Cx<R> cx_ipow(const Cx<R>& z, int m) {
    Cx<R> base = (m >= 0) ? z : inverse(z);
    unsigned k = static_cast<unsigned>(m >= 0 ? m : -m);
    Cx<R> r(R(1));
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

// (lambda^m - lambda^-m) / (lambda - lambda^-1), with the limit value
// m lambda^(m-1) once lambda is within 1e-20 of +-1.
template <class R>
Cx<R> triangular_power_ratio(const Cx<R>& lambda, int m) {
    using C = Cx<R>;
    const R degenerate_tol = R("1e-20");
    const C one(R(1));
    if (abs(lambda - one) < degenerate_tol || abs(lambda + one) < degenerate_tol)
        return C(R(m)) * cx_ipow(lambda, m - 1);
    const C li = inverse(lambda);
    return (cx_ipow(lambda, m) - cx_ipow(lambda, -m)) / (lambda - li);
}

}  // namespace detail

/// Integer power of an upper-triangular determinant-one matrix
/// [[lambda, beta], [0, 1/lambda]]; works for negative exponents and
/// handles the degenerate eigenvalue by its limit.
template <class R>
Mat2<Cx<R>> upper_triangular_power(const Cx<R>& lambda, const Cx<R>& beta, int m) {
    using C = Cx<R>;
    const C lm = detail::cx_ipow(lambda, m);
    return {lm, beta * detail::triangular_power_ratio(lambda, m), C{}, detail::cx_ipow(lambda, -m)};
}

template <class R>
struct SurgeryEntries {
    Cx<R> d11, d12, d22;  // d21 vanishes identically
};

/// Entries of D = X - L^-n along the variety, using the closed-form L and
/// the stable triangular power.
template <class R>
SurgeryEntries<R> surgery_system(const SurgerySpec& spec, const Cx<R>& s, Branch b) {
    using C = Cx<R>;
    if (s.is_zero()) throw std::domain_error("surgery_system: s must be nonzero");
    const Mat2<C> L = longitude_closed_form(s, b);
    const Mat2<C> Ln = upper_triangular_power(L.a11, L.a12, -spec.n);
    return {s - Ln.a11, C(R(1)) - Ln.a12, inverse(s) - Ln.a22};
}

/// One real interval with open/closed and unbounded ends.
template <class R>
struct RealInterval {
    R lo{}, hi{};
    bool lo_closed = true, hi_closed = true;
    bool lo_unbounded = false, hi_unbounded = false;

    bool contains(const R& x) const {
        if (!lo_unbounded && (lo_closed ? x < lo : x <= lo)) return false;
        if (!hi_unbounded && (hi_closed ? x > hi : x >= hi)) return false;
        return true;
    }
};

/// The four real s-intervals where the discriminant is positive:
/// (-inf, -e1], [-e2, 0), (0, e2], [e1, +inf) with
/// e1 = sqrt((3+sqrt 5)/2), e2 = sqrt((3-sqrt 5)/2), e1 e2 = 1.
template <class R>
std::array<RealInterval<R>, 4> real_parameter_intervals() {
    using std::sqrt;
    const R r5 = sqrt(R(5));
    const R e1 = sqrt((3 + r5) / 2);
    const R e2 = sqrt((3 - r5) / 2);
    std::array<RealInterval<R>, 4> out;
    out[0] = {R(0), -e1, false, true, true, false};
    out[1] = {-e2, R(0), true, false, false, false};
    out[2] = {R(0), e2, false, true, false, false};
    out[3] = {e1, R(0), true, false, false, true};
    return out;
}

}  // namespace fig8
