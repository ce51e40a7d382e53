#pragma once

#include <cmath>
#include <cstdint>

namespace heis {

// Deterministic per-sample random streams: stream(seed, index) always yields
// the same sequence regardless of thread interleaving.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed);
        r.state_ ^= (index + 1) * 0xbf58476d1ce4e5b9ull;
        r.next();
        r.next();
        return r;
    }

    std::uint64_t next() {  // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    // log-uniform on [a, b], a > 0
    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }

    void unit_vec2(double& cx, double& cy) {
        double t = uniform(0.0, 2.0 * M_PI);
        cx = std::cos(t);
        cy = std::sin(t);
    }

    // uniform in the closed unit disc
    void in_disc(double& px, double& py) {
        double r = std::sqrt(unit());
        double cx, cy;
        unit_vec2(cx, cy);
        px = r * cx;
        py = r * cy;
    }

  private:
    std::uint64_t state_;
};

}  // namespace heis
