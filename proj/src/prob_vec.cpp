#include "qmaj/prob_vec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmaj {

ProbVec::ProbVec(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("ProbVec: empty distribution");
    }
    for (double& v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ProbVec: non-finite component");
        }
        if (v < 0.0) {
            if (v < -kNegativityTol) {
                throw std::invalid_argument(
                    "ProbVec: negative component " + std::to_string(v));
            }
            v = 0.0;
        }
    }
    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument(
            "ProbVec: components sum to " + std::to_string(sum) + ", not 1");
    }
}

ProbVec::ProbVec(std::initializer_list<double> values)
    : ProbVec(std::vector<double>(values)) {}

std::vector<double> ProbVec::sorted_desc() const {
    std::vector<double> s = values_;
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

} // namespace qmaj
