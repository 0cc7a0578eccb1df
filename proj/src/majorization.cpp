#include "qmaj/majorization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qmaj/bloch.hpp"

namespace qmaj {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::vector<double> padded_sorted_desc(const ProbVec& p, std::size_t n) {
    std::vector<double> s = p.sorted_desc();
    s.resize(n, 0.0);
    return s;
}

// Sum of the k largest of the four components, k = 1..3.
double top_k_sum(std::array<double, 4> c, std::size_t k) {
    std::sort(c.begin(), c.end(), std::greater<double>());
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        s += c[i];
    }
    return s;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Equal:
        return "Equal";
    case Verdict::Majorizes:
        return "Majorizes";
    case Verdict::MajorizedBy:
        return "MajorizedBy";
    case Verdict::Incomparable:
        return "Incomparable";
    }
    return "?";
}

MajorizationRelation compare(const ProbVec& p, const ProbVec& q, double tol) {
    const std::size_t n = std::max(p.size(), q.size());
    const std::vector<double> ps = padded_sorted_desc(p, n);
    const std::vector<double> qs = padded_sorted_desc(q, n);

    bool p_ge = true; // p's prefixes all >= q's (p would majorize q)
    bool q_ge = true;
    bool all_equal = true;
    std::size_t first_p_below = 0;
    std::size_t first_p_above = 0;
    double pp = 0.0, qq = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        pp += ps[k - 1];
        qq += qs[k - 1];
        const double diff = pp - qq;
        if (std::abs(diff) > tol) {
            all_equal = false;
            if (diff < 0.0) {
                p_ge = false;
                if (first_p_below == 0) {
                    first_p_below = k;
                }
            } else {
                q_ge = false;
                if (first_p_above == 0) {
                    first_p_above = k;
                }
            }
        }
    }

    if (all_equal) {
        return {Verdict::Equal, std::nullopt};
    }
    if (p_ge) {
        return {Verdict::Majorizes, std::nullopt};
    }
    if (q_ge) {
        return {Verdict::MajorizedBy, std::nullopt};
    }
    return {Verdict::Incomparable,
            std::make_pair(first_p_below, first_p_above)};
}

ProbVec apply_noise(const ProbVec& p, double eta) {
    if (p.size() != 2) {
        throw std::invalid_argument("apply_noise: expects a 2-outcome vector");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error("apply_noise: eta outside [0, 1]");
    }
    const double d = 0.5 * (1.0 + eta);
    const double o = 0.5 * (1.0 - eta);
    return ProbVec{d * p[0] + o * p[1], o * p[0] + d * p[1]};
}

double purity_threshold_joint_vs_intrinsic() {
    const MeasurementConfig cfg = MeasurementConfig::balanced();
    const auto prefix3_gap = [&cfg](double smag) {
        const BlochState s = family_state({FamilyKind::Intermediate, +1, +1, smag});
        const double joint =
            top_k_sum(stat_components(StatKind::Joint, s.sx(), s.sz(), cfg), 3);
        const double product = top_k_sum(
            stat_components(StatKind::IntrinsicProduct, s.sx(), s.sz(), cfg), 3);
        return joint - product;
    };
    return scan::bisect_root(prefix3_gap, 0.1, 1.0, 1e-12);
}

ProbVec compute_bound_vector(StatKind kind, const MeasurementConfig& cfg,
                             scan::Exec exec) {
    std::array<double, 3> sup{};
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto f = [&, k](double theta, double r) {
            return top_k_sum(
                stat_components(kind, r * std::sin(theta), r * std::cos(theta), cfg),
                k);
        };
        sup[k - 1] = scan::disk_maximum(f, 512, 129, exec).value;
    }
    const std::array<double, 4> diff{sup[0], sup[1] - sup[0], sup[2] - sup[1],
                                     std::max(0.0, 1.0 - sup[2])};
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        if (diff[i] + 1e-9 < diff[i + 1]) {
            throw BoundConsistencyError(
                "compute_bound_vector: prefix suprema give a non-descending "
                "difference vector (optimization failure)");
        }
    }
    return ProbVec({diff[0], diff[1], diff[2], diff[3]});
}

ProbVec balanced_bound_reference(StatKind kind) {
    switch (kind) {
    case StatKind::Joint:
        return ProbVec{0.5, kSqrt2 / 4.0, (2.0 - kSqrt2) / 4.0, 0.0};
    case StatKind::MarginalProduct:
        return ProbVec{9.0 / 16.0, (8.0 - kSqrt2) / (16.0 * kSqrt2),
                       (7.0 * kSqrt2 - 8.0) / (16.0 * kSqrt2), 1.0 / 16.0};
    case StatKind::IntrinsicProduct:
        return ProbVec{(3.0 + 2.0 * kSqrt2) / 8.0, (5.0 - 2.0 * kSqrt2) / 8.0,
                       0.0, 0.0};
    }
    throw std::domain_error("balanced_bound_reference: unknown kind");
}

double attainability_gap(StatKind kind, const MeasurementConfig& cfg,
                         scan::Exec exec) {
    const ProbVec bound = compute_bound_vector(kind, cfg, exec);
    const auto f = [&](double theta, double r) {
        auto c = stat_components(kind, r * std::sin(theta), r * std::cos(theta),
                                 cfg);
        std::sort(c.begin(), c.end(), std::greater<double>());
        double d = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            d = std::max(d, std::abs(c[i] - bound[i]));
        }
        return d;
    };
    return scan::disk_minimum(f, 512, 129, exec).value;
}

} // namespace qmaj
