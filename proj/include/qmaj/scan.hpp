#pragma once

#include <cstddef>
#include <functional>

namespace qmaj::scan {

/// Every grid kernel comes in two variants sharing one contract: Serial is
/// the reference implementation, Parallel the OpenMP one. Both return
/// bitwise-identical results (reductions are min/max with index tie-break,
/// never floating sums), which the test suite asserts.
enum class Exec { Serial, Parallel };

struct Extremum {
    double arg = 0.0;
    double value = 0.0;
};

struct Extrema {
    Extremum min;
    Extremum max;
};

/// Minimum and maximum of a smooth 2*pi-periodic f over one period,
/// located on an n-point grid and sharpened by golden-section search to
/// argument tolerance ~1e-12.
Extrema periodic_extrema(const std::function<double(double)>& f,
                         std::size_t grid_points, Exec exec);

struct DiskPoint {
    double theta = 0.0;
    double radius = 0.0;
    double value = 0.0;
};

/// Maximum (resp. minimum) of f(theta, r) over [0, 2*pi) x [0, 1], i.e.
/// over the closed unit disk in polar form. Coarse grid of
/// n_theta x n_radius cells, then local box refinement.
DiskPoint disk_maximum(const std::function<double(double, double)>& f,
                       std::size_t n_theta, std::size_t n_radius, Exec exec);
DiskPoint disk_minimum(const std::function<double(double, double)>& f,
                       std::size_t n_theta, std::size_t n_radius, Exec exec);

/// Golden-section minimizer on [lo, hi]; f unimodal there.
Extremum golden_min(const std::function<double(double)>& f, double lo,
                    double hi, double arg_tol);

/// Root of a continuous f on a bracket with f(lo) and f(hi) of opposite
/// sign (either may be zero), bisected to the given argument tolerance.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double arg_tol);

} // namespace qmaj::scan
