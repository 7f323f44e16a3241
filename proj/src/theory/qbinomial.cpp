#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmlab/rng.hpp"
#include "rmlab/theory.hpp"

namespace rmlab::theory {
namespace {

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
    uint128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= q;
        if (v > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("gaussian_binomial: q^m exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t gaussian_binomial(unsigned m, unsigned r, std::uint64_t q) {
    if (r > m) {
        throw std::domain_error("gaussian_binomial: r > m");
    }
    if (q < 2) {
        throw std::domain_error("gaussian_binomial: q must be at least 2");
    }
    // G_j = G_{j-1} (q^(m-j+1) - 1) / (q^j - 1); every G_j is [m j]_q, an integer.
    uint128 g = 1;
    for (unsigned j = 1; j <= r; ++j) {
        g *= checked_pow(q, m - j + 1) - 1;
        g /= checked_pow(q, j) - 1;
        if (g > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("gaussian_binomial: value exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(g);
}

Real gaussian_binomial_real(unsigned m, unsigned r, Real q) {
    if (r > m) {
        throw std::domain_error("gaussian_binomial_real: r > m");
    }
    Real g = 1;
    for (unsigned j = 1; j <= r; ++j) {
        g *= (std::pow(q, static_cast<Real>(m - j + 1)) - 1) / (std::pow(q, static_cast<Real>(j)) - 1);
    }
    return g;
}

}  // namespace rmlab::theory
