#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "qmaj/bloch.hpp"
#include "qmaj/prob_vec.hpp"

namespace qmaj {

/// Apparatus overlap angle delta in [0, pi/2]; cos(delta) = <a+|a->.
/// delta = 0 observes sigma_x exactly, delta = pi/2 observes sigma_z
/// exactly, delta = pi/4 balances the added noise between the two.
class MeasurementConfig {
  public:
    explicit MeasurementConfig(double delta);
    static MeasurementConfig balanced();

    double delta() const { return delta_; }
    double cos_delta() const { return cos_; }
    double sin_delta() const { return sin_; }

  private:
    double delta_, cos_, sin_;
};

/// Outcome distribution of the simultaneous measurement, indexed by the
/// sign pair (j, k) with j the sigma_x outcome and k the sigma_z outcome.
/// Canonical component order: (+,+), (+,-), (-,+), (-,-).
class JointStats {
  public:
    static constexpr std::array<std::pair<int, int>, 4> kOutcomeOrder = {
        {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};

    explicit JointStats(const std::array<double, 4>& probs);

    double at(int j, int k) const;
    const std::array<double, 4>& probs() const { return probs_; }
    ProbVec to_probvec() const;

    /// Sum over k (sigma_x marginal) and over j (sigma_z marginal),
    /// in outcome order (+1, -1).
    std::array<double, 2> marginal_x() const;
    std::array<double, 2> marginal_z() const;

  private:
    std::array<double, 4> probs_;
};

/// Exact single-observable statistics p^X, p^Z of the bare state.
std::pair<ProbVec, ProbVec> intrinsic_stats(const BlochState& state);

/// Joint distribution p~_{j,k} = (1 + j sx cos(delta) + k sz sin(delta))/4.
JointStats joint_stats(const BlochState& state, const MeasurementConfig& cfg);

/// Noisy per-observable marginals of the joint distribution.
std::pair<ProbVec, ProbVec> marginal_stats(const BlochState& state,
                                           const MeasurementConfig& cfg);

/// All pairwise products p_i * q_j, laid out with the q index fastest.
ProbVec product_distribution(const ProbVec& p, const ProbVec& q);

/// The three 4-outcome statistics the analysis compares.
enum class StatKind { Joint, MarginalProduct, IntrinsicProduct };

ProbVec statistics_of(StatKind kind, const BlochState& state,
                      const MeasurementConfig& cfg);

/// Allocation-free core of statistics_of for grid scans. The kinds depend
/// on the state only through (sx, sz).
std::array<double, 4> stat_components(StatKind kind, double sx, double sz,
                                      const MeasurementConfig& cfg);

/// i.i.d. outcome counts for the joint distribution, in canonical order.
/// Generator: std::mt19937_64 seeded as given, one draw per sample mapped
/// to [0,1) by u = (x >> 11) * 2^-53, then inverse CDF over the canonical
/// order. Identical seeds give identical counts on every platform.
std::array<std::uint64_t, 4> sample_joint(const BlochState& state,
                                          const MeasurementConfig& cfg,
                                          std::uint64_t n, std::uint64_t seed);

} // namespace qmaj
