#pragma once

#include <vector>

#include "qmaj/statistics.hpp"

namespace qmaj {

/// Interferometric complementarity measures for a pure system state at
/// polar angle theta monitored by a pure apparatus with overlap
/// cos(delta). All in [0, 1], with D^2 + V^2 = 1 in this pure-state case.
struct DualityReport {
    double distinguishability;
    double visibility;
    double predictability;
    double sum_sq; // D^2 + V^2
};

/// Path weights w+- = cos^2, sin^2 of theta/2; D, V, P from them and the
/// apparatus overlap.
DualityReport duality_report(double theta, const MeasurementConfig& cfg);

/// All theta in [0, pi] with D = V, i.e. w+ w- |<a+|a->|^2 = 1/8, found
/// by bisection. Empty when the overlap is too small for visibility to
/// reach distinguishability.
std::vector<double> dv_equal_locus(const MeasurementConfig& cfg);

} // namespace qmaj
