#pragma once

#include "fig8/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fig8 {

/// Thrown when the simultaneous iteration fails to converge; carries the
/// best iterate and its worst residual for diagnosis.
template <class R>
struct RootFindError : std::runtime_error {
    std::vector<Cx<R>> best;
    R residual;
    RootFindError(std::string msg, std::vector<Cx<R>> b, R r)
        : std::runtime_error(std::move(msg)), best(std::move(b)), residual(std::move(r)) {}
};

namespace detail {

// Evaluate p and p' at z, plus the running bound sum |c_k||z|^k used as a
// backward-error stopping scale.
template <class R>
void horner_with_bound(const Poly<Cx<R>>& p, const Cx<R>& z, Cx<R>& pz, Cx<R>& dpz, R& bound) {
    pz = Cx<R>{};
    dpz = Cx<R>{};
    bound = R(0);
    R az = abs(z);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        dpz = dpz * z + pz;
        pz = pz * z + *it;
        bound = bound * az + abs(*it);
    }
}

// Initial guesses from the upper convex hull of (k, log|c_k|): the classic
// Newton-polygon placement, robust when coefficients span many orders of
// magnitude.
template <class R>
std::vector<Cx<R>> initial_guesses(const Poly<Cx<R>>& p) {
    const int d = p.degree();
    std::vector<double> lg(static_cast<size_t>(d) + 1, -1e12);
    for (int k = 0; k <= d; ++k) {
        R a = abs(p.coeffs[static_cast<size_t>(k)]);
        if (a != 0) lg[static_cast<size_t>(k)] = log2_approx(a);
    }
    // upper hull indices, left to right
    std::vector<int> hull;
    for (int k = 0; k <= d; ++k) {
        if (lg[static_cast<size_t>(k)] < -1e11) continue;
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double cross = (lg[static_cast<size_t>(b)] - lg[static_cast<size_t>(a)]) * (k - a) -
                           (lg[static_cast<size_t>(k)] - lg[static_cast<size_t>(a)]) * (b - a);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<Cx<R>> z;
    z.reserve(static_cast<size_t>(d));
    const R two_pi = 8 * atan(R(1));
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        int k1 = hull[e], k2 = hull[e + 1];
        int m = k2 - k1;
        double lr = (lg[static_cast<size_t>(k1)] - lg[static_cast<size_t>(k2)]) / m;
        lr = std::clamp(lr, -800.0, 800.0);
        R radius = pow(R(2), R(lr));
        for (int j = 0; j < m; ++j) {
            R angle = two_pi * (R(j) + R(0.3618) + R(0.5) * R(static_cast<int>(e))) / R(m);
            z.push_back(polar(radius, angle));
        }
    }
    return z;
}

}  // namespace detail

template <class R>
struct RootOptions {
    int max_iters = 400;
    int polish_iters = 3;
};

/// All roots (with multiplicity) of p by Aberth-Ehrlich simultaneous
/// iteration, then Newton polishing against the original polynomial.
/// Roots are returned sorted by (Re, Im) for determinism.
template <class R>
std::vector<Cx<R>> poly_roots(const Poly<Cx<R>>& p_in, int polish_iters = 3,
                              int max_iters = 400) {
    using C = Cx<R>;
    if (p_in.is_zero() || p_in.degree() < 1)
        throw std::invalid_argument("poly_roots requires degree >= 1");

    // roots at the origin: strip trailing structure exactly
    Poly<C> p = p_in;
    std::vector<C> roots;
    size_t lead0 = 0;
    while (lead0 < p.coeffs.size() - 1 && p.coeffs[lead0].is_zero()) ++lead0;
    for (size_t i = 0; i < lead0; ++i) roots.push_back(C{});
    if (lead0) p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<long>(lead0));
    const int d = p.degree();
    if (d == 0) return roots;

    // normalize magnitudes
    R scale = infinity_norm(p);
    Poly<C> q = p * C(R(1) / scale);

    std::vector<C> z = detail::initial_guesses(q);
    const R eps = machine_eps<R>();
    const R step_tol = eps * 64;
    const R d_eps = eps * R(4 * (d + 1));
    std::vector<bool> done(static_cast<size_t>(d), false);

    C pz, dpz;
    R bound;
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        int active = 0;
        R max_step{};
        for (int i = 0; i < d; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            ++active;
            detail::horner_with_bound(q, z[static_cast<size_t>(i)], pz, dpz, bound);
            if (abs(pz) <= d_eps * bound) {
                done[static_cast<size_t>(i)] = true;
                continue;
            }
            if (dpz.is_zero()) {  // sit on a critical point: nudge
                z[static_cast<size_t>(i)] += C(R(1e-3) * (1 + abs(z[static_cast<size_t>(i)])));
                continue;
            }
            C newton = pz / dpz;
            C sum{};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                C diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (diff.is_zero()) {
                    diff = C(R(1e-6) * (1 + abs(z[static_cast<size_t>(i)])));
                    z[static_cast<size_t>(j)] -= diff;
                }
                sum += inverse(diff);
            }
            C denom = C(1) - newton * sum;
            C w = (abs(denom) < eps) ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= w;
            R st = abs(w) / (1 + abs(z[static_cast<size_t>(i)]));
            max_step = std::max(max_step, st);
            if (st <= step_tol) done[static_cast<size_t>(i)] = true;
        }
        if (active == 0 || (max_step > 0 && max_step <= step_tol)) break;
    }
    if (iter >= max_iters) {
        R worst{};
        for (int i = 0; i < d; ++i) {
            detail::horner_with_bound(q, z[static_cast<size_t>(i)], pz, dpz, bound);
            worst = std::max(worst, abs(pz) / std::max(bound, R(1)));
        }
        std::vector<C> best = z;
        best.insert(best.end(), roots.begin(), roots.end());
        throw RootFindError<R>("root finder did not converge after " +
                                   std::to_string(max_iters) + " iterations",
                               std::move(best), worst);
    }

    // Newton polish on the original (un-deflated) polynomial
    for (int i = 0; i < d; ++i) {
        C r = z[static_cast<size_t>(i)];
        for (int k = 0; k < polish_iters; ++k) {
            detail::horner_with_bound(q, r, pz, dpz, bound);
            if (dpz.is_zero() || abs(pz) <= eps * bound) break;
            r -= pz / dpz;
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    });
    return roots;
}

}  // namespace fig8
