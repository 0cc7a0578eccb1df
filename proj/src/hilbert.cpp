#include "qmaj/hilbert.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <omp.h>

namespace qmaj::hilbert {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

Mat2 projector_z(int sign) {
    Mat2 p{};
    p[sign > 0 ? 0 : 3] = 1.0;
    return p;
}

Mat2 projector_x(int j) {
    // (I + j sigma_x)/2
    const double half = 0.5;
    return Mat2{half, j * half, j * half, half};
}

template <std::size_t M>
std::array<cplx, M> add(const std::array<cplx, M>& a,
                        const std::array<cplx, M>& b) {
    std::array<cplx, M> c;
    for (std::size_t i = 0; i < M; ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

} // namespace

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 c{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    c[(2 * i + k) * 4 + (2 * j + l)] = a[i * 2 + j] * b[k * 2 + l];
                }
            }
        }
    }
    return c;
}

Mat2 density_matrix(const BlochState& s) {
    return Mat2{cplx(0.5 * (1.0 + s.sz()), 0.0),
                cplx(0.5 * s.sx(), -0.5 * s.sy()),
                cplx(0.5 * s.sx(), 0.5 * s.sy()),
                cplx(0.5 * (1.0 - s.sz()), 0.0)};
}

ApparatusVectors build_apparatus(const MeasurementConfig& cfg) {
    const double d = cfg.delta();
    const double ch = std::cos(0.5 * d);
    const double sh = std::sin(0.5 * d);
    ApparatusVectors av;
    av.a_plus = {cplx(ch, 0.0), cplx(sh, 0.0)};
    av.a_minus = {cplx(ch, 0.0), cplx(-sh, 0.0)};
    av.phi_angle = 0.5 * std::numbers::pi - d;

    if (d < 1e-3) {
        // The projection formula divides by cos(phi) = sin(delta); near
        // delta = 0 the quotient degrades to 0/0 although its exact value
        // for these symmetric representatives is the +-45 degree basis.
        const double r = 1.0 / kSqrt2;
        av.b_plus = {cplx(r, 0.0), cplx(r, 0.0)};
        av.b_minus = {cplx(r, 0.0), cplx(-r, 0.0)};
        return av;
    }
    const double cp = std::cos(0.5 * av.phi_angle);
    const double sp = std::sin(0.5 * av.phi_angle);
    const double inv = 1.0 / std::cos(av.phi_angle);
    for (std::size_t i = 0; i < 2; ++i) {
        av.b_plus[i] = inv * (cp * av.a_plus[i] - sp * av.a_minus[i]);
        av.b_minus[i] = inv * (-sp * av.a_plus[i] + cp * av.a_minus[i]);
    }
    return av;
}

Mat4 coupling_unitary(const MeasurementConfig& cfg) {
    const double c = std::cos(0.5 * cfg.delta());
    const double s = std::sin(0.5 * cfg.delta());
    // Planar rotations with first column a+-.
    const Mat2 u_plus{cplx(c, 0.0), cplx(-s, 0.0), cplx(s, 0.0), cplx(c, 0.0)};
    const Mat2 u_minus{cplx(c, 0.0), cplx(s, 0.0), cplx(-s, 0.0), cplx(c, 0.0)};
    return add(kron(projector_z(+1), u_plus), kron(projector_z(-1), u_minus));
}

JointStats oracle_joint_probs(const BlochState& state, const Mat2& u_plus,
                              const Mat2& u_minus, const Vec2& b_plus,
                              const Vec2& b_minus) {
    const Vec2 fiducial{cplx(1.0, 0.0), cplx(0.0, 0.0)};
    const Mat4 initial = kron(density_matrix(state), outer(fiducial, fiducial));
    const Mat4 u = add(kron(projector_z(+1), u_plus),
                       kron(projector_z(-1), u_minus));
    const Mat4 evolved = matmul(matmul(u, initial), adjoint(u));

    std::array<double, 4> probs{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto [j, k] = JointStats::kOutcomeOrder[i];
        const Mat4 effect =
            kron(projector_x(j), outer(k > 0 ? b_plus : b_minus,
                                       k > 0 ? b_plus : b_minus));
        probs[i] = trace(matmul(evolved, effect)).real();
    }
    return JointStats(probs);
}

JointStats oracle_joint_probs(const BlochState& state,
                              const MeasurementConfig& cfg) {
    const ApparatusVectors av = build_apparatus(cfg);
    const double c = std::cos(0.5 * cfg.delta());
    const double s = std::sin(0.5 * cfg.delta());
    const Mat2 u_plus{cplx(c, 0.0), cplx(-s, 0.0), cplx(s, 0.0), cplx(c, 0.0)};
    const Mat2 u_minus{cplx(c, 0.0), cplx(s, 0.0), cplx(-s, 0.0), cplx(c, 0.0)};
    return oracle_joint_probs(state, u_plus, u_minus, av.b_plus, av.b_minus);
}

double batch_deviation(std::size_t trials, std::uint64_t seed,
                       scan::Exec exec) {
    if (trials == 0) {
        throw std::domain_error("batch_deviation: need at least one trial");
    }
    struct Draw {
        double sx, sy, sz, delta;
    };
    std::mt19937_64 rng(seed);
    const auto uniform = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<Draw> draws(trials);
    for (Draw& d : draws) {
        // Uniform direction, radius biased toward the surface.
        const double ct = 2.0 * uniform() - 1.0;
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double phi = 2.0 * std::numbers::pi * uniform();
        const double r = std::cbrt(uniform());
        d = {r * st * std::cos(phi), r * st * std::sin(phi), r * ct,
             uniform() * 0.5 * std::numbers::pi};
    }

    const auto trial_deviation = [](const Draw& d) {
        const BlochState state(d.sx, d.sy, d.sz);
        const MeasurementConfig cfg(d.delta);
        const JointStats oracle = oracle_joint_probs(state, cfg);
        const JointStats closed = joint_stats(state, cfg);
        double dev = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            dev = std::max(dev, std::abs(oracle.probs()[i] - closed.probs()[i]));
        }
        const auto [mx, mz] = marginal_stats(state, cfg);
        const auto omx = oracle.marginal_x();
        const auto omz = oracle.marginal_z();
        for (std::size_t i = 0; i < 2; ++i) {
            dev = std::max(dev, std::abs(omx[i] - mx[i]));
            dev = std::max(dev, std::abs(omz[i] - mz[i]));
        }
        return dev;
    };

    double worst = 0.0;
    const auto n = static_cast<std::int64_t>(trials);
    if (exec == scan::Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            worst = std::max(worst, trial_deviation(draws[i]));
        }
    } else {
#pragma omp parallel for schedule(static) reduction(max : worst)
        for (std::int64_t i = 0; i < n; ++i) {
            worst = std::max(worst, trial_deviation(draws[i]));
        }
    }
    return worst;
}

} // namespace qmaj::hilbert
