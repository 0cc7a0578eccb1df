#include "qmaj/statistics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace qmaj {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double clamp_dust(double v) {
    return (v < 0.0 && v >= -ProbVec::kNegativityTol) ? 0.0 : v;
}

} // namespace

MeasurementConfig::MeasurementConfig(double delta) : delta_(delta) {
    if (!(delta >= 0.0 && delta <= kHalfPi)) {
        throw std::domain_error("MeasurementConfig: delta outside [0, pi/2]");
    }
    cos_ = std::cos(delta);
    sin_ = std::sin(delta);
}

MeasurementConfig MeasurementConfig::balanced() {
    return MeasurementConfig(std::numbers::pi / 4.0);
}

JointStats::JointStats(const std::array<double, 4>& probs) : probs_(probs) {
    double sum = 0.0;
    for (double& v : probs_) {
        v = clamp_dust(v);
        if (v < 0.0) {
            throw std::domain_error("JointStats: negative probability");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > ProbVec::kSumTol) {
        throw std::domain_error("JointStats: probabilities do not sum to 1");
    }
}

double JointStats::at(int j, int k) const {
    for (std::size_t i = 0; i < 4; ++i) {
        if (kOutcomeOrder[i].first == j && kOutcomeOrder[i].second == k) {
            return probs_[i];
        }
    }
    throw std::domain_error("JointStats: outcome labels must be +-1");
}

ProbVec JointStats::to_probvec() const {
    return ProbVec(std::vector<double>(probs_.begin(), probs_.end()));
}

std::array<double, 2> JointStats::marginal_x() const {
    return {probs_[0] + probs_[1], probs_[2] + probs_[3]};
}

std::array<double, 2> JointStats::marginal_z() const {
    return {probs_[0] + probs_[2], probs_[1] + probs_[3]};
}

std::pair<ProbVec, ProbVec> intrinsic_stats(const BlochState& state) {
    ProbVec px{clamp_dust(0.5 * (1.0 + state.sx())),
               clamp_dust(0.5 * (1.0 - state.sx()))};
    ProbVec pz{clamp_dust(0.5 * (1.0 + state.sz())),
               clamp_dust(0.5 * (1.0 - state.sz()))};
    return {px, pz};
}

JointStats joint_stats(const BlochState& state, const MeasurementConfig& cfg) {
    const double x = state.sx() * cfg.cos_delta();
    const double z = state.sz() * cfg.sin_delta();
    return JointStats({0.25 * (1.0 + x + z), 0.25 * (1.0 + x - z),
                       0.25 * (1.0 - x + z), 0.25 * (1.0 - x - z)});
}

std::pair<ProbVec, ProbVec> marginal_stats(const BlochState& state,
                                           const MeasurementConfig& cfg) {
    const double x = state.sx() * cfg.cos_delta();
    const double z = state.sz() * cfg.sin_delta();
    ProbVec px{clamp_dust(0.5 * (1.0 + x)), clamp_dust(0.5 * (1.0 - x))};
    ProbVec pz{clamp_dust(0.5 * (1.0 + z)), clamp_dust(0.5 * (1.0 - z))};
    return {px, pz};
}

ProbVec product_distribution(const ProbVec& p, const ProbVec& q) {
    std::vector<double> out;
    out.reserve(p.size() * q.size());
    for (double pi : p) {
        for (double qj : q) {
            out.push_back(pi * qj);
        }
    }
    return ProbVec(std::move(out));
}

std::array<double, 4> stat_components(StatKind kind, double sx, double sz,
                                      const MeasurementConfig& cfg) {
    switch (kind) {
    case StatKind::Joint: {
        const double x = sx * cfg.cos_delta();
        const double z = sz * cfg.sin_delta();
        return {0.25 * (1.0 + x + z), 0.25 * (1.0 + x - z),
                0.25 * (1.0 - x + z), 0.25 * (1.0 - x - z)};
    }
    case StatKind::MarginalProduct: {
        const double x = sx * cfg.cos_delta();
        const double z = sz * cfg.sin_delta();
        const double xp = 0.5 * (1.0 + x), xm = 0.5 * (1.0 - x);
        const double zp = 0.5 * (1.0 + z), zm = 0.5 * (1.0 - z);
        return {xp * zp, xp * zm, xm * zp, xm * zm};
    }
    case StatKind::IntrinsicProduct: {
        const double xp = 0.5 * (1.0 + sx), xm = 0.5 * (1.0 - sx);
        const double zp = 0.5 * (1.0 + sz), zm = 0.5 * (1.0 - sz);
        return {xp * zp, xp * zm, xm * zp, xm * zm};
    }
    }
    throw std::domain_error("StatKind: unknown kind");
}

ProbVec statistics_of(StatKind kind, const BlochState& state,
                      const MeasurementConfig& cfg) {
    const auto c = stat_components(kind, state.sx(), state.sz(), cfg);
    return ProbVec({clamp_dust(c[0]), clamp_dust(c[1]), clamp_dust(c[2]),
                    clamp_dust(c[3])});
}

std::array<std::uint64_t, 4> sample_joint(const BlochState& state,
                                          const MeasurementConfig& cfg,
                                          std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::domain_error("sample_joint: need at least one sample");
    }
    const auto p = joint_stats(state, cfg).probs();
    std::array<double, 4> cdf{};
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    cdf[3] = 1.0;

    std::mt19937_64 rng(seed);
    std::array<std::uint64_t, 4> counts{};
    for (std::uint64_t s = 0; s < n; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::size_t k = 0;
        while (k < 3 && u >= cdf[k]) {
            ++k;
        }
        ++counts[k];
    }
    return counts;
}

} // namespace qmaj
