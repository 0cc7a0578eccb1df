#include "qmaj/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmaj {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const char* what) {
    if (!cond) {
        throw std::domain_error(what);
    }
}

} // namespace

BlochState::BlochState(double sx, double sy, double sz)
    : sx_(sx), sy_(sy), sz_(sz) {
    const double n2 = sx * sx + sy * sy + sz * sz;
    if (!(n2 <= 1.0 + kNormTol)) {
        throw std::domain_error("BlochState: |s| = " +
                                std::to_string(std::sqrt(n2)) +
                                " exceeds 1 (unphysical)");
    }
}

double BlochState::norm() const {
    return std::sqrt(sx_ * sx_ + sy_ * sy_ + sz_ * sz_);
}

BlochState bloch_from_angles(const StateAngles& a) {
    require(a.theta >= 0.0 && a.theta <= kPi, "StateAngles: theta outside [0, pi]");
    require(a.phi >= 0.0 && a.phi < 2.0 * kPi, "StateAngles: phi outside [0, 2*pi)");
    require(a.smag >= 0.0 && a.smag <= 1.0, "StateAngles: smag outside [0, 1]");
    const double st = std::sin(a.theta);
    return BlochState(a.smag * st * std::cos(a.phi),
                      a.smag * st * std::sin(a.phi),
                      a.smag * std::cos(a.theta));
}

BlochState family_state(const StateFamily& f) {
    require(f.sign1 == 1 || f.sign1 == -1, "StateFamily: sign1 must be +-1");
    require(f.sign2 == 1 || f.sign2 == -1, "StateFamily: sign2 must be +-1");
    require(f.smag >= 0.0 && f.smag <= 1.0, "StateFamily: smag outside [0, 1]");
    switch (f.kind) {
    case FamilyKind::ExtremeX:
        return BlochState(f.sign1 * f.smag, 0.0, 0.0);
    case FamilyKind::ExtremeZ:
        return BlochState(0.0, 0.0, f.sign1 * f.smag);
    case FamilyKind::Intermediate: {
        const double c = f.smag / std::numbers::sqrt2;
        return BlochState(f.sign1 * c, 0.0, f.sign1 * f.sign2 * c);
    }
    }
    throw std::domain_error("StateFamily: unknown kind");
}

BlochState xz_state(double theta, double smag) {
    require(smag >= 0.0 && smag <= 1.0, "xz_state: smag outside [0, 1]");
    return BlochState(smag * std::sin(theta), 0.0, smag * std::cos(theta));
}

double purity(const BlochState& s) {
    const double n = s.norm();
    return 0.5 * (1.0 + n * n);
}

} // namespace qmaj
