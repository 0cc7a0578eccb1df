#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qmaj/bloch.hpp"
#include "qmaj/prob_vec.hpp"

namespace qmaj::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Uniform-ish point on the probability simplex via normalized
/// exponentials.
inline ProbVec random_prob_vec(std::mt19937_64& g, std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = -std::log(uniform(g, 1e-300, 1.0));
        sum += x;
    }
    for (double& x : v) {
        x /= sum;
    }
    return ProbVec(std::move(v));
}

inline BlochState random_state(std::mt19937_64& g) {
    const double ct = uniform(g, -1.0, 1.0);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = uniform(g, 0.0, 2.0 * 3.141592653589793);
    const double r = std::cbrt(uniform(g));
    return BlochState(r * st * std::cos(phi), r * st * std::sin(phi), r * ct);
}

} // namespace qmaj::testutil
