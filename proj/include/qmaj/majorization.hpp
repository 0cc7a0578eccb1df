#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qmaj/prob_vec.hpp"
#include "qmaj/scan.hpp"
#include "qmaj/statistics.hpp"

namespace qmaj {

enum class Verdict { Equal, Majorizes, MajorizedBy, Incomparable };

/// Outcome of the prefix-sum comparison of two distributions. For
/// Incomparable, witness holds the first prefix lengths at which each
/// direction fails: witness->first is where p's prefix falls below q's
/// (so p cannot majorize q), witness->second where it rises above
/// (so q cannot majorize p).
struct MajorizationRelation {
    Verdict verdict;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

const char* verdict_name(Verdict v);

/// Majorization comparison of p against q: sorts both nonincreasing,
/// pads the shorter with zeros, and compares all prefix sums within tol.
MajorizationRelation compare(const ProbVec& p, const ProbVec& q,
                             double tol = 1e-10);

/// The symmetric doubly stochastic 2x2 map with diagonal (1+eta)/2.
/// Output is always majorized by the input.
ProbVec apply_noise(const ProbVec& p, double eta);

/// The purity |s| at which, for intermediate states under balanced
/// measurement, the third prefix sums of the sorted joint and sorted
/// intrinsic-product statistics cross: below it the joint distribution is
/// majorized by the product, above they are incomparable.
double purity_threshold_joint_vs_intrinsic();

struct BoundConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The constant vector majorizing every achievable statistics of the
/// given kind: per prefix length k, the supremum over the Bloch ball of
/// the k largest components, assembled into a difference vector. The
/// search runs over the XZ unit disk (the statistics carry no sy
/// dependence) on a 512 x 129 grid with local refinement.
ProbVec compute_bound_vector(StatKind kind, const MeasurementConfig& cfg,
                             scan::Exec exec = scan::Exec::Parallel);

/// Closed-form bound vectors for the balanced measurement, used as the
/// independent reference for compute_bound_vector. The intrinsic-product
/// one is independent of delta.
ProbVec balanced_bound_reference(StatKind kind);

/// Smallest max-norm distance between any achievable sorted statistics of
/// the kind and its bound vector; strictly positive — no state attains
/// the bound.
double attainability_gap(StatKind kind, const MeasurementConfig& cfg,
                         scan::Exec exec = scan::Exec::Parallel);

} // namespace qmaj
