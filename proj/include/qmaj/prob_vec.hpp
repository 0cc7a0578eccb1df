#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qmaj {

/// A finite probability distribution: nonnegative components summing to one.
///
/// Components in [-1e-15, 0) are treated as floating dust and clamped to
/// zero; anything more negative, or a total off unity by more than 1e-12,
/// is rejected.
class ProbVec {
  public:
    static constexpr double kNegativityTol = 1e-15;
    static constexpr double kSumTol = 1e-12;

    explicit ProbVec(std::vector<double> values);
    ProbVec(std::initializer_list<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    /// Components rearranged in nonincreasing order.
    std::vector<double> sorted_desc() const;

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

  private:
    std::vector<double> values_;
};

} // namespace qmaj
