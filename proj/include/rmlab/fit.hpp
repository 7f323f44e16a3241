#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmlab/campaign.hpp"

namespace rmlab {

struct PoissonFit {
    std::size_t count = 0;
    double mean = 0;
    double variance = 0;    // unbiased sample variance
    double dispersion = 0;  // variance / mean; NaN when the mean is 0
    double mean_std_error = 0;
};

inline constexpr std::size_t kMinPoissonRecords = 1000;

/// Fit over sigma of the analyzed records. Throws std::invalid_argument with
/// fewer than kMinPoissonRecords of them.
[[nodiscard]] PoissonFit poisson_fit(const std::vector<TrialRecord>& records);

/// Same statistics over raw counts, no minimum.
[[nodiscard]] PoissonFit poisson_fit(std::span<const std::size_t> values);

}  // namespace rmlab
