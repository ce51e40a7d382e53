#pragma once

#include <cmath>
#include <stdexcept>

namespace heis {

// Point of the first Heisenberg group in exponential/polarized coordinates.
// Group law: (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+x*y').
struct HPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    HPoint() = default;
    HPoint(double px, double py, double pz) : x(px), y(py), z(pz) {
        if (!(std::isfinite(px) && std::isfinite(py) && std::isfinite(pz)))
            throw std::invalid_argument("HPoint: coordinates must be finite");
    }
};

inline HPoint identity() { return HPoint{}; }

inline HPoint mul(const HPoint& p, const HPoint& q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z + p.x * q.y};
}

inline HPoint inv(const HPoint& p) { return {-p.x, -p.y, -p.z + p.x * p.y}; }

// Scaling automorphism: (x,y,z) -> (r x, r y, r^2 z), r >= 0.
inline HPoint dilate(double r, const HPoint& p) {
    if (!(r >= 0.0)) throw std::invalid_argument("dilate: r must be >= 0");
    return {r * p.x, r * p.y, r * r * p.z};
}

// exp of t*(a X + b Y + w Z) in these coordinates; log is its inverse.
inline HPoint lie_exp(double a, double b, double w) {
    return {a, b, w + 0.5 * a * b};
}

inline void lie_log(const HPoint& p, double& a, double& b, double& w) {
    a = p.x;
    b = p.y;
    w = p.z - 0.5 * p.x * p.y;
}

// Signed "Dido" area of p relative to the identity: the symplectic area a
// horizontal curve from 0 to p must sweep.  A = z - x*y/2.
inline double dido_area(const HPoint& p) { return p.z - 0.5 * p.x * p.y; }

inline double planar_norm(const HPoint& p) { return std::hypot(p.x, p.y); }

inline double planar_dist(const HPoint& p, const HPoint& q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

inline bool approx_eq(const HPoint& p, const HPoint& q, double tol) {
    return std::fabs(p.x - q.x) <= tol && std::fabs(p.y - q.y) <= tol &&
           std::fabs(p.z - q.z) <= tol;
}

}  // namespace heis
