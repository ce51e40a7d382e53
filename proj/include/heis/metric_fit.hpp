#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "heis/distance.hpp"
#include "heis/parallel.hpp"
#include "heis/point.hpp"
#include "heis/rng.hpp"

namespace heis {

struct MetricFit {
    double L = 0.0;            // least L with d_c <= L * proxy + L on the sample
    double worst_ratio = 0.0;  // same as L
    std::size_t samples = 0;
    std::size_t hard_failures = 0;  // pairs violating chord <= d_c + tol
};

// Samples random pairs in [-box, box]^3 and fits the smallest L such that
// d_c(p, q) <= L * proxy(p, q) + L over the sample, where the proxy is the
// Riemannian length of the straight coordinate segment (an upper bound for
// d_0).  The lower comparison d_0 <= d_c is checked through its observable
// consequence: the planar projection distance, which bounds d_0 from below,
// must not exceed d_c.
inline MetricFit verify_metric_comparison(std::size_t samples, double box,
                                          std::uint64_t seed,
                                          double tol = kDistanceTol) {
    if (samples < 1)
        throw std::invalid_argument("verify_metric_comparison: samples >= 1");
    std::vector<double> ratios(samples, 0.0);
    std::vector<unsigned char> bad(samples, 0);
    parallel_for(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        HPoint p(rng.uniform(-box, box), rng.uniform(-box, box),
                 rng.uniform(-box, box));
        HPoint q(rng.uniform(-box, box), rng.uniform(-box, box),
                 rng.uniform(-box, box));
        double dc = cc_distance(p, q, tol);
        double proxy = segment_riemannian_length(p, q);
        ratios[i] = dc / (proxy + 1.0);
        if (planar_dist(p, q) > dc + 10.0 * tol) bad[i] = 1;
    });
    MetricFit fit;
    fit.samples = samples;
    fit.L = *std::max_element(ratios.begin(), ratios.end());
    fit.worst_ratio = fit.L;
    for (auto b : bad) fit.hard_failures += b;
    return fit;
}

// The comparison constant used wherever a guaranteed bound is needed: the
// fitted value with a factor-2 safety margin.
inline double fitted_L_doubled(std::size_t samples = 10000, double box = 2.0,
                               std::uint64_t seed = 42) {
    return 2.0 * verify_metric_comparison(samples, box, seed).L;
}

}  // namespace heis
