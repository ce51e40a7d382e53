#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace heis {

enum class Provenance { fitted, chosen, derived };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::fitted: return "fitted";
        case Provenance::chosen: return "chosen";
        case Provenance::derived: return "derived";
    }
    return "?";
}

// The named constants of the construction.  eta and rho are always
// recomputed from (n, c), never stored.
struct CarnotParams {
    int k = 2;          // step
    double L = 2.0;     // metric comparison constant
    double K = 1.0;     // Dehn constant
    double c = 2.0;     // cell-count constant, > 1
    int n = 2;          // scaling exponent (dilation 2^n)
    int n0 = 1;         // finest horizontal-grid exponent
    double mu = 1.0;    // max cell diameter
    double b = 1.0;     // displacement constant

    struct Tags {
        Provenance k = Provenance::chosen;
        Provenance L = Provenance::fitted;
        Provenance K = Provenance::chosen;
        Provenance c = Provenance::chosen;
        Provenance n = Provenance::chosen;
        Provenance n0 = Provenance::chosen;
        Provenance mu = Provenance::fitted;
        Provenance b = Provenance::fitted;
    } tags;

    void validate() const {
        if (k < 1) throw std::invalid_argument("CarnotParams: k must be >= 1");
        if (!(L > 0)) throw std::invalid_argument("CarnotParams: L must be > 0");
        if (!(K > 0)) throw std::invalid_argument("CarnotParams: K must be > 0");
        if (!(c > 1)) throw std::invalid_argument("CarnotParams: c must be > 1");
        if (n0 < 1) throw std::invalid_argument("CarnotParams: n0 must be >= 1");
        if (n < n0) throw std::invalid_argument("CarnotParams: n must be >= n0");
        if (!(mu > 0)) throw std::invalid_argument("CarnotParams: mu must be > 0");
        if (!(b > 0)) throw std::invalid_argument("CarnotParams: b must be > 0");
    }

    double eta() const;
    double rho() const;
};

// eta(n, c) = n / (3n/2 + log2 c); strictly increasing in n, sup = 2/3.
inline double eta(int n, double c) {
    if (n < 1) throw std::invalid_argument("eta: n must be >= 1");
    if (!(c > 1.0)) throw std::invalid_argument("eta: c must be > 1");
    return n / (1.5 * n + std::log2(c));
}

// rho(n, c) = c^{-1} 2^{-3n/2}; satisfies eta * log2(rho) = -n.
inline double rho(int n, double c) {
    if (n < 1) throw std::invalid_argument("rho: n must be >= 1");
    if (!(c > 1.0)) throw std::invalid_argument("rho: c must be > 1");
    return std::exp2(-1.5 * n) / c;
}

inline double CarnotParams::eta() const { return heis::eta(n, c); }
inline double CarnotParams::rho() const { return heis::rho(n, c); }

}  // namespace heis
