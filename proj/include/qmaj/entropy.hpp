#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qmaj/prob_vec.hpp"
#include "qmaj/scan.hpp"
#include "qmaj/statistics.hpp"

namespace qmaj {

/// The entropic order alpha >= 0, with the two limiting cases carried as
/// explicit tags: One is the Shannon limit (the direct formula has a
/// removable singularity there) and Infinity the min-entropy. Finite
/// construction redirects arguments within 1e-9 of 1 to the One tag.
class EntropyIndex {
  public:
    enum class Tag { Finite, One, Infinity };

    static EntropyIndex finite(double alpha);
    static EntropyIndex one() { return EntropyIndex(Tag::One, 1.0); }
    static EntropyIndex infinity();
    /// Maps any admissible double, including +inf, to the right tag.
    static EntropyIndex of(double alpha);

    Tag tag() const { return tag_; }
    /// Representative numeric value: alpha for Finite, 1 for One, +inf
    /// for Infinity.
    double alpha() const { return alpha_; }

  private:
    EntropyIndex(Tag tag, double alpha) : tag_(tag), alpha_(alpha) {}
    Tag tag_;
    double alpha_;
};

/// Components below this count as structural zeros for the alpha = 0
/// support count.
constexpr double kSupportThreshold = 1e-12;

double renyi(std::span<const double> p, const EntropyIndex& idx);
double renyi(const ProbVec& p, const EntropyIndex& idx);

/// Tsallis entropy; defined here for finite alpha and the Shannon limit
/// only. Related to renyi by T = (exp((1-alpha) R) - 1)/(1-alpha).
double tsallis(const ProbVec& p, const EntropyIndex& idx);

/// Lower bound on R_alpha(pX pZ) over all states: ln 2 up to the branch
/// index, then twice the entropy of ((1+1/sqrt2)/2, (1-1/sqrt2)/2).
double entropic_ur_bound_intrinsic(const EntropyIndex& idx);

/// The index where the two branches of the intrinsic bound meet
/// (~1.4275); computed once by bisection.
double ur_branch_index();

/// R_alpha of the chosen statistics for the XZ-plane state at angle theta.
double renyi_of_kind(StatKind kind, const EntropyIndex& idx,
                     const MeasurementConfig& cfg, double smag, double theta);

struct FamilyExtrema {
    double r_min, r_max;
    double argmin_theta, argmax_theta;
};

/// Extrema of theta -> renyi_of_kind over one full turn, resolved on a
/// dense grid plus golden-section sharpening.
FamilyExtrema renyi_theta_extrema(StatKind kind, const EntropyIndex& idx,
                                  const MeasurementConfig& cfg, double smag,
                                  scan::Exec exec = scan::Exec::Parallel);

struct DegenerateFamilyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// (R - R_min)/(R_max - R_min) over the XZ-plane family; throws
/// DegenerateFamilyError when the family entropy is constant in theta
/// (e.g. smag = 0).
double normalized_renyi(StatKind kind, const EntropyIndex& idx,
                        const MeasurementConfig& cfg, double smag,
                        double theta, scan::Exec exec = scan::Exec::Parallel);

/// R_alpha(extreme) - R_alpha(intermediate) for the chosen statistics;
/// the extreme representative is the sigma_z eigenstate family.
double delta_r(StatKind kind, const EntropyIndex& idx,
               const MeasurementConfig& cfg, double smag);

struct CriticalIndexReport {
    StatKind kind;
    double search_lo, search_hi;
    std::vector<double> roots;      // strictly increasing
    std::vector<int> interval_signs; // sign of delta_r between consecutive roots
};

/// Sign changes of alpha -> delta_r on (lo, hi], located by a fixed-step
/// scan and sharpened by bisection to 1e-9.
CriticalIndexReport critical_indices(StatKind kind,
                                     const MeasurementConfig& cfg, double smag,
                                     double lo = 1e-3, double hi = 10.0,
                                     scan::Exec exec = scan::Exec::Parallel);

} // namespace qmaj
