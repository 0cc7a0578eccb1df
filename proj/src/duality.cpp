#include "qmaj/duality.hpp"

#include <cmath>
#include <numbers>

#include "qmaj/scan.hpp"

namespace qmaj {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

double dv_condition(double theta, double overlap) {
    const double wp = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double wm = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    return wp * wm * overlap * overlap - 0.125;
}

} // namespace

DualityReport duality_report(double theta, const MeasurementConfig& cfg) {
    const double wp = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double wm = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double overlap = cfg.cos_delta();
    const double v = 2.0 * std::sqrt(wp * wm) * overlap;
    const double d = std::sqrt(std::max(0.0, 1.0 - 4.0 * wp * wm * overlap * overlap));
    return {d, v, std::abs(wp - wm), d * d + v * v};
}

std::vector<double> dv_equal_locus(const MeasurementConfig& cfg) {
    constexpr double kFlatTol = 1e-12;
    const double overlap = cfg.cos_delta();
    // The condition peaks at theta = pi/2 where both paths are equally
    // probable.
    const double peak = dv_condition(kHalfPi, overlap);
    if (peak < -kFlatTol) {
        return {};
    }
    if (peak <= kFlatTol) {
        return {kHalfPi};
    }
    const auto f = [overlap](double t) { return dv_condition(t, overlap); };
    return {scan::bisect_root(f, 0.0, kHalfPi, 1e-10),
            scan::bisect_root(f, kHalfPi, std::numbers::pi, 1e-10)};
}

} // namespace qmaj
