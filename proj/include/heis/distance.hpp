#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "heis/point.hpp"

namespace heis {

// Thrown when an iterative solve cannot reach the requested tolerance.  A
// reported failure, never a silent wrong answer.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kDistanceTol = 1e-9;

namespace detail {

// Dido profile g(psi) = (2 psi - sin 2 psi) / (8 sin^2 psi) on (0, pi),
// strictly increasing from 0 to infinity.  For a minimizing arc with chord d
// and swept signed area |A|, the half central angle psi solves g(psi) = |A|/d^2.
inline double dido_profile(double psi) {
    double s = std::sin(psi);
    return (2.0 * psi - std::sin(2.0 * psi)) / (8.0 * s * s);
}

inline double dido_profile_deriv(double psi) {
    double s = std::sin(psi);
    double s2 = std::sin(2.0 * psi);
    double s4 = s * s * s * s;
    return (4.0 * s4 - s2 * (2.0 * psi - s2)) / (8.0 * s4);
}

// Length of the arc as a function of the half angle: L(psi) = d * psi / sin psi.
inline double arc_length_of(double d, double psi) {
    if (psi <= 0.0) return d;
    return d * psi / std::sin(psi);
}

// Solve g(psi) = target by safeguarded Newton inside a maintained bracket.
// Unconditionally convergent: falls back to bisection whenever a Newton step
// leaves the bracket.  Stops when the bracketed length uncertainty <= tol.
inline double solve_dido_half_angle(double target, double chord, double tol,
                                    int max_iter = 200) {
    double lo = 1e-12, hi = M_PI - 1e-12;
    if (target <= dido_profile(lo)) return lo;
    if (target >= dido_profile(hi)) return hi;
    // small-angle profile is psi/6; clamp into the bracket either way
    double psi = std::min(0.5 * (lo + hi), std::max(lo, 6.0 * target));
    for (int it = 0; it < max_iter; ++it) {
        double g = dido_profile(psi) - target;
        if (g > 0.0)
            hi = psi;
        else
            lo = psi;
        if (arc_length_of(chord, hi) - arc_length_of(chord, lo) <= tol)
            return 0.5 * (lo + hi);
        double dg = dido_profile_deriv(psi);
        double next = psi - g / dg;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        psi = next;
    }
    throw NonConvergence("solve_dido_half_angle: no convergence after max_iter");
}

}  // namespace detail

// A minimizing horizontal path from the identity to some endpoint: either the
// horizontal lift of a straight planar chord or of a circular planar arc.
struct Geodesic {
    HPoint base;       // left-translation applied to the identity-based path
    bool is_arc = false;

    // chord branch
    double wx = 0.0, wy = 0.0;

    // arc branch, planar circle relative to base frame
    double cx = 0.0, cy = 0.0, radius = 0.0;
    double phi0 = 0.0, dphi = 0.0;

    double length = 0.0;

    // Exact z of the lift: integral of x dy along the planar arc.
    double arc_lift_z(double phi) const {
        double s0 = std::sin(phi0), s1 = std::sin(phi);
        double t0 = std::sin(2.0 * phi0), t1 = std::sin(2.0 * phi);
        return cx * radius * (s1 - s0) +
               radius * radius * (0.5 * (phi - phi0) + 0.25 * (t1 - t0));
    }

    HPoint point_at(double t) const {
        if (!is_arc) {
            double x = t * wx, y = t * wy;
            return mul(base, HPoint(x, y, 0.5 * x * y));
        }
        double phi = phi0 + t * dphi;
        HPoint p(cx + radius * std::cos(phi), cy + radius * std::sin(phi),
                 arc_lift_z(phi));
        return mul(base, p);
    }
};

// Carnot-Carathéodory distance for the standard metric (X, Y, Z orthonormal
// at the identity).  Reduces to d_c(0, p^{-1} q); if the residual area A is
// zero the planar chord realizes the distance, if the chord vanishes a full
// circle of area |A| does, otherwise a circular arc found by a bracketed
// monotone solve.
inline double cc_distance(const HPoint& p, const HPoint& q,
                          double tol = kDistanceTol) {
    if (!(tol > 0.0)) throw std::invalid_argument("cc_distance: tol must be > 0");
    HPoint w = mul(inv(p), q);
    double d = planar_norm(w);
    double A = dido_area(w);
    double absA = std::fabs(A);
    if (absA == 0.0) return d;
    if (d < 1e-150) return 2.0 * std::sqrt(M_PI * absA);
    double target = absA / (d * d);
    if (target <= detail::dido_profile(1e-12)) return d;
    if (target >= detail::dido_profile(M_PI - 1e-12))
        return 2.0 * std::sqrt(M_PI * absA);
    double psi = detail::solve_dido_half_angle(target, d, tol);
    return detail::arc_length_of(d, psi);
}

// The minimizing path itself, identity-based geometry plus the base point.
inline Geodesic solve_geodesic(const HPoint& p, const HPoint& q,
                               double tol = kDistanceTol) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_geodesic: tol must be > 0");
    HPoint w = mul(inv(p), q);
    double d = planar_norm(w);
    double A = dido_area(w);
    double absA = std::fabs(A);

    Geodesic g;
    g.base = p;

    bool chordlike = absA == 0.0 ||
                     (d >= 1e-150 && absA / (d * d) <= detail::dido_profile(1e-12));
    if (chordlike) {
        g.is_arc = false;
        g.wx = w.x;
        g.wy = w.y;
        g.length = d;
        return g;
    }

    g.is_arc = true;
    double sgn = (A >= 0.0) ? 1.0 : -1.0;
    bool circlelike =
        d < 1e-150 || absA / (d * d) >= detail::dido_profile(M_PI - 1e-12);
    if (circlelike) {
        // closed loop: full circle through the origin, center on the +x axis
        double R = std::sqrt(absA / M_PI);
        g.cx = R;
        g.cy = 0.0;
        g.radius = R;
        g.phi0 = M_PI;
        g.dphi = sgn * 2.0 * M_PI;
        g.length = 2.0 * M_PI * R;
        return g;
    }

    double psi = detail::solve_dido_half_angle(absA / (d * d), d, tol);
    double theta = 2.0 * psi;
    double R = d / (2.0 * std::sin(psi));
    double ux = w.x / d, uy = w.y / d;
    double off = R * std::cos(psi);
    g.cx = 0.5 * w.x + sgn * (-uy) * off;
    g.cy = 0.5 * w.y + sgn * ux * off;
    g.radius = R;
    g.phi0 = std::atan2(-g.cy, -g.cx);
    g.dphi = sgn * theta;
    g.length = detail::arc_length_of(d, psi);
    return g;
}

// ell_0 of the straight coordinate segment p -> q under the left-invariant
// metric: the frame coefficients along the segment are (dx, dy, dz - x dy).
// Composite Simpson with interval doubling; the integrand is smooth.
inline double segment_riemannian_length(const HPoint& p, const HPoint& q,
                                        double rel_tol = 1e-12) {
    double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
    auto speed = [&](double t) {
        double zc = dz - (p.x + t * dx) * dy;
        return std::sqrt(dx * dx + dy * dy + zc * zc);
    };
    int n = 8;
    auto simpson = [&](int panels) {
        double h = 1.0 / panels;
        double acc = speed(0.0) + speed(1.0);
        for (int i = 1; i < panels; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * speed(i * h);
        return acc * h / 3.0;
    };
    double prev = simpson(n);
    for (int it = 0; it < 14; ++it) {
        n *= 2;
        double cur = simpson(n);
        if (std::fabs(cur - prev) <= rel_tol * std::max(1.0, std::fabs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

// ell_0 of r -> delta_r(x) over [s, t]; the frame speed has the closed form
// sqrt(x1^2 + x2^2 + r^2 (2 x3 - x1 x2)^2).
inline double scaling_curve_length(const HPoint& x, double s, double t) {
    if (!(0.0 <= s && s <= t && t <= 1.0))
        throw std::invalid_argument("scaling_curve_length: need 0 <= s <= t <= 1");
    double a = x.x * x.x + x.y * x.y;
    double b = 2.0 * x.z - x.x * x.y;
    auto speed = [&](double r) { return std::sqrt(a + r * r * b * b); };
    int n = 64;
    double h = (t - s) / n;
    if (h == 0.0) return 0.0;
    double acc = speed(s) + speed(t);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * speed(s + i * h);
    return acc * h / 3.0;
}

}  // namespace heis
