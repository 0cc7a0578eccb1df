#include "qmaj/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <omp.h>

#include "qmaj/bloch.hpp"

namespace qmaj {

namespace {

constexpr double kOneRedirect = 1e-9;

double shannon(std::span<const double> p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) {
            h -= v * std::log(v);
        }
    }
    return h;
}

std::array<double, 4> kind_components(StatKind kind,
                                      const MeasurementConfig& cfg,
                                      double smag, double theta) {
    const double sx = smag * std::sin(theta);
    const double sz = smag * std::cos(theta);
    return stat_components(kind, sx, sz, cfg);
}

} // namespace

EntropyIndex EntropyIndex::finite(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::domain_error("EntropyIndex: alpha must be finite and >= 0");
    }
    if (std::abs(alpha - 1.0) <= kOneRedirect) {
        return one();
    }
    return EntropyIndex(Tag::Finite, alpha);
}

EntropyIndex EntropyIndex::infinity() {
    return EntropyIndex(Tag::Infinity,
                        std::numeric_limits<double>::infinity());
}

EntropyIndex EntropyIndex::of(double alpha) {
    if (std::isinf(alpha) && alpha > 0.0) {
        return infinity();
    }
    return finite(alpha);
}

double renyi(std::span<const double> p, const EntropyIndex& idx) {
    switch (idx.tag()) {
    case EntropyIndex::Tag::One:
        return shannon(p);
    case EntropyIndex::Tag::Infinity:
        return -std::log(*std::max_element(p.begin(), p.end()));
    case EntropyIndex::Tag::Finite:
        break;
    }
    const double alpha = idx.alpha();
    if (alpha == 0.0) {
        std::size_t support = 0;
        for (double v : p) {
            if (v > kSupportThreshold) {
                ++support;
            }
        }
        return std::log(static_cast<double>(support));
    }
    // Factor out the largest component so that large alpha cannot
    // underflow the whole power sum.
    const double m = *std::max_element(p.begin(), p.end());
    double s = 0.0;
    for (double v : p) {
        if (v > 0.0) {
            s += std::pow(v / m, alpha);
        }
    }
    return (alpha * std::log(m) + std::log(s)) / (1.0 - alpha);
}

double renyi(const ProbVec& p, const EntropyIndex& idx) {
    return renyi(std::span<const double>(p.values()), idx);
}

double tsallis(const ProbVec& p, const EntropyIndex& idx) {
    switch (idx.tag()) {
    case EntropyIndex::Tag::One:
        return shannon(std::span<const double>(p.values()));
    case EntropyIndex::Tag::Infinity:
        throw std::domain_error("tsallis: index Infinity not supported");
    case EntropyIndex::Tag::Finite:
        break;
    }
    const double alpha = idx.alpha();
    double s = 0.0;
    for (double v : p) {
        if (alpha == 0.0) {
            s += (v > kSupportThreshold) ? 1.0 : 0.0;
        } else if (v > 0.0) {
            s += std::pow(v, alpha);
        }
    }
    return (s - 1.0) / (1.0 - alpha);
}

namespace {

// Both branches of the intrinsic uncertainty bound. The second is twice
// the Renyi entropy of the intermediate-state intrinsic statistics.
constexpr double kBoundHi = 0.5 * (1.0 + 1.0 / std::numbers::sqrt2);
constexpr double kBoundLo = 0.5 * (1.0 - 1.0 / std::numbers::sqrt2);

double intermediate_branch(const EntropyIndex& idx) {
    const std::array<double, 2> p{kBoundHi, kBoundLo};
    return 2.0 * renyi(p, idx);
}

} // namespace

double ur_branch_index() {
    static const double alpha_i = [] {
        const auto f = [](double a) {
            return intermediate_branch(EntropyIndex::finite(a)) -
                   std::numbers::ln2;
        };
        return scan::bisect_root(f, 1.01, 3.0, 1e-12);
    }();
    return alpha_i;
}

double entropic_ur_bound_intrinsic(const EntropyIndex& idx) {
    if (idx.tag() == EntropyIndex::Tag::Infinity) {
        return intermediate_branch(idx);
    }
    return idx.alpha() <= ur_branch_index() ? std::numbers::ln2
                                            : intermediate_branch(idx);
}

double renyi_of_kind(StatKind kind, const EntropyIndex& idx,
                     const MeasurementConfig& cfg, double smag, double theta) {
    const auto c = kind_components(kind, cfg, smag, theta);
    return renyi(std::span<const double>(c), idx);
}

FamilyExtrema renyi_theta_extrema(StatKind kind, const EntropyIndex& idx,
                                  const MeasurementConfig& cfg, double smag,
                                  scan::Exec exec) {
    const auto f = [&](double theta) {
        return renyi_of_kind(kind, idx, cfg, smag, theta);
    };
    const scan::Extrema e = scan::periodic_extrema(f, 4096, exec);
    return {e.min.value, e.max.value, e.min.arg, e.max.arg};
}

double normalized_renyi(StatKind kind, const EntropyIndex& idx,
                        const MeasurementConfig& cfg, double smag,
                        double theta, scan::Exec exec) {
    const FamilyExtrema e = renyi_theta_extrema(kind, idx, cfg, smag, exec);
    const double range = e.r_max - e.r_min;
    if (range <= 1e-12) {
        throw DegenerateFamilyError(
            "normalized_renyi: family entropy constant in theta (smag = " +
            std::to_string(smag) + ")");
    }
    return (renyi_of_kind(kind, idx, cfg, smag, theta) - e.r_min) / range;
}

double delta_r(StatKind kind, const EntropyIndex& idx,
               const MeasurementConfig& cfg, double smag) {
    const BlochState extreme =
        family_state({FamilyKind::ExtremeZ, +1, +1, smag});
    const BlochState intermediate =
        family_state({FamilyKind::Intermediate, +1, +1, smag});
    const auto pe = stat_components(kind, extreme.sx(), extreme.sz(), cfg);
    const auto pi =
        stat_components(kind, intermediate.sx(), intermediate.sz(), cfg);
    return renyi(std::span<const double>(pe), idx) -
           renyi(std::span<const double>(pi), idx);
}

CriticalIndexReport critical_indices(StatKind kind,
                                     const MeasurementConfig& cfg, double smag,
                                     double lo, double hi, scan::Exec exec) {
    if (!(lo > 0.0 && lo < hi)) {
        throw std::domain_error("critical_indices: need 0 < lo < hi");
    }
    constexpr double kStep = 1e-3;
    constexpr double kRootTol = 1e-9;
    const auto n = static_cast<std::int64_t>(std::floor((hi - lo) / kStep)) + 1;
    const auto alpha_at = [&](std::int64_t i) {
        return i == n - 1 ? hi : lo + kStep * static_cast<double>(i);
    };
    const auto f = [&](double alpha) {
        return delta_r(kind, EntropyIndex::of(alpha), cfg, smag);
    };

    std::vector<double> values(static_cast<std::size_t>(n));
    if (exec == scan::Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            values[static_cast<std::size_t>(i)] = f(alpha_at(i));
        }
    } else {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            values[static_cast<std::size_t>(i)] = f(alpha_at(i));
        }
    }

    // Walk the samples by nonzero sign; exact zeros on the grid fall
    // inside the bisection bracket of the surrounding sign change.
    CriticalIndexReport report{kind, lo, hi, {}, {}};
    int last_sign = 0;
    std::int64_t last_idx = -1;
    for (std::int64_t i = 0; i < n; ++i) {
        const double v = values[static_cast<std::size_t>(i)];
        const int s = v > 0.0 ? +1 : (v < 0.0 ? -1 : 0);
        if (s == 0) {
            continue;
        }
        if (last_sign != 0 && s != last_sign) {
            report.roots.push_back(
                scan::bisect_root(f, alpha_at(last_idx), alpha_at(i), kRootTol));
        }
        last_sign = s;
        last_idx = i;
    }

    std::vector<double> edges{lo};
    edges.insert(edges.end(), report.roots.begin(), report.roots.end());
    edges.push_back(hi);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        const double v = f(mid);
        report.interval_signs.push_back(v > 0.0 ? +1 : (v < 0.0 ? -1 : 0));
    }
    return report;
}

} // namespace qmaj
