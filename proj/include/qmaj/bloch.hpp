#pragma once

namespace qmaj {

/// A qubit density operator rho = (I + s.sigma)/2 in Bloch form.
/// Construction rejects vectors with |s| > 1 beyond floating tolerance
/// instead of renormalizing them.
class BlochState {
  public:
    static constexpr double kNormTol = 1e-12;

    BlochState(double sx, double sy, double sz);

    double sx() const { return sx_; }
    double sy() const { return sy_; }
    double sz() const { return sz_; }

    /// |s|, the degree of purity: 1 for pure states, 0 maximally mixed.
    double norm() const;

  private:
    double sx_, sy_, sz_;
};

/// Spherical parametrization (theta, phi, |s|) of a Bloch vector.
struct StateAngles {
    double theta; // [0, pi]
    double phi;   // [0, 2*pi)
    double smag;  // [0, 1]
};

/// The two families competing for minimum uncertainty: eigenstates of
/// sigma_x or sigma_z (extreme) and of sigma_x +- sigma_z (intermediate),
/// mixed down to purity |s|.
enum class FamilyKind { ExtremeX, ExtremeZ, Intermediate };

struct StateFamily {
    FamilyKind kind;
    int sign1 = +1; // sign of the dominant Pauli component
    int sign2 = +1; // relative sign of sigma_z, Intermediate only
    double smag = 1.0;
};

BlochState bloch_from_angles(const StateAngles& angles);
BlochState family_state(const StateFamily& family);

/// State in the XZ plane (the set of states the theta-scans range over):
/// sx = smag*sin(theta), sz = smag*cos(theta), sy = 0, for any real theta.
BlochState xz_state(double theta, double smag);

/// Tr(rho^2) = (1 + |s|^2)/2.
double purity(const BlochState& state);

} // namespace qmaj
