#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heis/distance.hpp"
#include "heis/point.hpp"

namespace heis {

enum class SegMode { straight, geodesic, vertical };

// Piecewise curve in the group: vertices plus a per-segment interpolation
// mode.  "straight" segments are lifts of planar chords (with any z closure
// defect blended linearly), "geodesic" segments follow the minimizing arc
// between their endpoints, "vertical" segments move only in z.
struct HCurve {
    std::vector<HPoint> pts;
    std::vector<SegMode> modes;   // size pts.size() - 1
    std::vector<double> params;   // strictly increasing, params.front()=0, back()=1
    bool closed = false;

    std::size_t segments() const { return modes.size(); }
};

inline HCurve make_curve(std::vector<HPoint> pts, std::vector<SegMode> modes,
                         bool closed, std::vector<double> params = {}) {
    if (pts.size() < 2) throw std::invalid_argument("make_curve: need >= 2 points");
    if (modes.size() + 1 != pts.size())
        throw std::invalid_argument("make_curve: need one mode per segment");
    if (params.empty()) {
        params.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            params[i] = static_cast<double>(i) / (pts.size() - 1);
    }
    if (params.size() != pts.size())
        throw std::invalid_argument("make_curve: bad param count");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (!(params[i] > params[i - 1]))
            throw std::invalid_argument("make_curve: params must be strictly increasing");
    if (closed && !approx_eq(pts.front(), pts.back(), 1e-9))
        throw std::invalid_argument("make_curve: closed curve must return to start");
    HCurve c;
    c.pts = std::move(pts);
    c.modes = std::move(modes);
    c.params = std::move(params);
    c.closed = closed;
    return c;
}

namespace detail {

inline HPoint eval_straight(const HPoint& a, const HPoint& b, double t) {
    double x = a.x + t * (b.x - a.x);
    double y = a.y + t * (b.y - a.y);
    // horizontal lift of the planar chord, plus a linear share of whatever
    // closure defect the stored endpoints carry
    double zl = a.z + 0.5 * (a.x + x) * (y - a.y);
    double zb = a.z + 0.5 * (a.x + b.x) * (b.y - a.y);
    return {x, y, zl + t * (b.z - zb)};
}

inline HPoint eval_segment(const HPoint& a, const HPoint& b, SegMode mode, double t) {
    switch (mode) {
        case SegMode::straight:
            return eval_straight(a, b, t);
        case SegMode::vertical:
            return {a.x, a.y, a.z + t * (b.z - a.z)};
        case SegMode::geodesic: {
            Geodesic g = solve_geodesic(a, b);
            return g.point_at(t);
        }
    }
    throw std::logic_error("eval_segment: bad mode");
}

inline double segment_dc_length(const HPoint& a, const HPoint& b, SegMode mode) {
    switch (mode) {
        case SegMode::straight:
            return planar_dist(a, b);
        case SegMode::geodesic:
            return cc_distance(a, b);
        case SegMode::vertical:
            throw std::invalid_argument(
                "d_c length undefined for vertical segments");
    }
    throw std::logic_error("segment_dc_length: bad mode");
}

}  // namespace detail

inline HPoint eval(const HCurve& c, double t) {
    if (c.closed) {
        t -= std::floor(t);
    } else {
        t = std::min(1.0, std::max(0.0, t));
    }
    auto it = std::upper_bound(c.params.begin(), c.params.end(), t);
    std::size_t seg = (it == c.params.begin())
                          ? 0
                          : std::min<std::size_t>(c.params.size() - 2,
                                                  (it - c.params.begin()) - 1);
    double t0 = c.params[seg], t1 = c.params[seg + 1];
    double local = (t - t0) / (t1 - t0);
    return detail::eval_segment(c.pts[seg], c.pts[seg + 1], c.modes[seg], local);
}

// Sum of per-segment Carnot lengths.  Straight segments must actually be
// horizontal (their planar projection length is their d_c length only then);
// vertical segments are rejected.
inline double curve_length_dc(const HCurve& c) {
    double total = 0.0;
    for (std::size_t i = 0; i < c.segments(); ++i) {
        const HPoint &a = c.pts[i], &b = c.pts[i + 1];
        if (c.modes[i] == SegMode::straight) {
            double len = planar_dist(a, b);
            double lift = 0.5 * (a.x + b.x) * (b.y - a.y);
            if (std::fabs((b.z - a.z) - lift) > 1e-6 * std::max(1.0, len))
                throw std::invalid_argument(
                    "curve_length_dc: straight segment is not horizontal");
        }
        total += detail::segment_dc_length(a, b, c.modes[i]);
    }
    return total;
}

// ell_0 under the left-invariant metric; accepts any modes.
inline double riemannian_length(const HCurve& c) {
    if (c.pts.size() < 2)
        throw std::invalid_argument("riemannian_length: need >= 2 samples");
    double total = 0.0;
    for (std::size_t i = 0; i < c.segments(); ++i) {
        const HPoint &a = c.pts[i], &b = c.pts[i + 1];
        switch (c.modes[i]) {
            case SegMode::straight:
                total += segment_riemannian_length(a, b);
                break;
            case SegMode::vertical:
                total += std::fabs(b.z - a.z);
                break;
            case SegMode::geodesic:
                // horizontal, so ell_0 equals the planar (= d_c) length
                total += cc_distance(a, b);
                break;
        }
    }
    return total;
}

// Unique horizontal lift of a planar polyline starting at height z0.
inline HCurve horizontal_lift(const std::vector<std::pair<double, double>>& planar,
                              double z0) {
    if (planar.size() < 2)
        throw std::invalid_argument("horizontal_lift: need >= 2 planar points");
    std::vector<HPoint> pts;
    pts.reserve(planar.size());
    double z = z0;
    pts.emplace_back(planar[0].first, planar[0].second, z);
    for (std::size_t i = 1; i < planar.size(); ++i) {
        auto [x0, y0] = planar[i - 1];
        auto [x1, y1] = planar[i];
        z += 0.5 * (x0 + x1) * (y1 - y0);
        pts.emplace_back(x1, y1, z);
    }
    std::vector<SegMode> modes(planar.size() - 1, SegMode::straight);
    bool closed = approx_eq(pts.front(), pts.back(), 1e-9);
    return make_curve(std::move(pts), std::move(modes), closed);
}

// True iff every straight segment obeys the lift relation
// dz = (x_start + x_end) dy / 2 within tol * segment length (geodesic
// segments are horizontal by construction, vertical ones never are).
inline bool is_horizontal(const HCurve& c, double tol = 1e-9) {
    for (std::size_t i = 0; i < c.segments(); ++i) {
        if (c.modes[i] == SegMode::geodesic) continue;
        if (c.modes[i] == SegMode::vertical) return false;
        const HPoint &a = c.pts[i], &b = c.pts[i + 1];
        double lift = 0.5 * (a.x + b.x) * (b.y - a.y);
        double len = planar_dist(a, b);
        if (std::fabs((b.z - a.z) - lift) > tol * std::max(len, 1e-30))
            return false;
    }
    return true;
}

inline HCurve left_translate(const HPoint& g, const HCurve& c) {
    HCurve out = c;
    for (auto& p : out.pts) p = mul(g, p);
    return out;
}

inline HCurve dilate_curve(double r, const HCurve& c) {
    HCurve out = c;
    for (auto& p : out.pts) p = dilate(r, p);
    return out;
}

// Move the basepoint (param 0) to the identity; returns the translated curve
// and the original basepoint g, so that mul(g, .) restores the input.
inline std::pair<HCurve, HPoint> translate_to_origin(const HCurve& c) {
    HPoint g = c.pts.front();
    return {left_translate(inv(g), c), g};
}

namespace detail {

inline std::vector<double> cumulative_dc(const HCurve& c) {
    std::vector<double> cum(c.pts.size(), 0.0);
    for (std::size_t i = 0; i < c.segments(); ++i)
        cum[i + 1] = cum[i] + segment_dc_length(c.pts[i], c.pts[i + 1], c.modes[i]);
    return cum;
}

}  // namespace detail

// Reparametrize to constant d_c speed: vertices are kept, each segment is
// subdivided at equal arc steps, and the new params are exact arc-length
// fractions.  The image set is unchanged (subdivision points stay on the
// original segment paths).
inline HCurve constant_speed(const HCurve& c, std::size_t samples = 0) {
    auto cum = detail::cumulative_dc(c);
    double total = cum.back();
    if (!(total > 0.0))
        throw std::invalid_argument("constant_speed: zero-length curve");
    if (samples == 0) samples = 64 * c.segments();

    std::vector<HPoint> pts;
    std::vector<SegMode> modes;
    std::vector<double> params;
    pts.push_back(c.pts.front());
    params.push_back(0.0);
    for (std::size_t i = 0; i < c.segments(); ++i) {
        double len = cum[i + 1] - cum[i];
        if (len <= 0.0) continue;  // degenerate segment contributes nothing
        auto n = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(
                   static_cast<double>(samples) * len / total)));
        for (std::size_t k = 1; k <= n; ++k) {
            double local = static_cast<double>(k) / n;
            pts.push_back(k == n ? c.pts[i + 1]
                                 : detail::eval_segment(c.pts[i], c.pts[i + 1],
                                                        c.modes[i], local));
            modes.push_back(c.modes[i]);
            params.push_back((cum[i] + local * len) / total);
        }
    }
    params.back() = 1.0;
    return make_curve(std::move(pts), std::move(modes), c.closed, std::move(params));
}

// Minimizing path from p to q as a curve with `samples` vertices; its length
// is within tol of cc_distance(p, q).
inline HCurve cc_geodesic(const HPoint& p, const HPoint& q, std::size_t samples = 9,
                          double tol = kDistanceTol) {
    if (samples < 2) throw std::invalid_argument("cc_geodesic: samples >= 2");
    if (approx_eq(p, q, 0.0)) {
        std::vector<HPoint> pts(std::max<std::size_t>(samples, 2), p);
        std::vector<SegMode> modes(pts.size() - 1, SegMode::straight);
        return make_curve(std::move(pts), std::move(modes), false);
    }
    Geodesic g = solve_geodesic(p, q, tol);
    if (g.is_arc && samples < 4) samples = 4;
    std::vector<HPoint> pts;
    pts.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i)
        pts.push_back(g.point_at(static_cast<double>(i) / (samples - 1)));
    std::vector<SegMode> modes(
        samples - 1, g.is_arc ? SegMode::geodesic : SegMode::straight);
    return make_curve(std::move(pts), std::move(modes), false);
}

}  // namespace heis
