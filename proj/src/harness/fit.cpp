#include "rmlab/fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmlab {

PoissonFit poisson_fit(std::span<const std::size_t> values) {
    PoissonFit f;
    f.count = values.size();
    if (f.count == 0) {
        return f;
    }
    double sum = 0;
    for (std::size_t v : values) {
        sum += static_cast<double>(v);
    }
    const double k = static_cast<double>(f.count);
    f.mean = sum / k;
    double ss = 0;
    for (std::size_t v : values) {
        const double d = static_cast<double>(v) - f.mean;
        ss += d * d;
    }
    f.variance = f.count > 1 ? ss / (k - 1) : 0.0;
    f.dispersion = f.mean > 0 ? f.variance / f.mean : std::numeric_limits<double>::quiet_NaN();
    f.mean_std_error = std::sqrt(f.variance / k);
    return f;
}

PoissonFit poisson_fit(const std::vector<TrialRecord>& records) {
    std::vector<std::size_t> sigma;
    for (const TrialRecord& r : records) {
        if (r.analyzed) {
            sigma.push_back(r.sigma);
        }
    }
    if (sigma.size() < kMinPoissonRecords) {
        throw std::invalid_argument("poisson_fit: need at least " + std::to_string(kMinPoissonRecords) +
                                    " analyzed records, got " + std::to_string(sigma.size()));
    }
    return poisson_fit(std::span<const std::size_t>(sigma));
}

}  // namespace rmlab
