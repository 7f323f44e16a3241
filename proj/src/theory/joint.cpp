#include <cmath>
#include <stdexcept>

#include "rmlab/theory.hpp"

namespace rmlab::theory {

Real p_star(unsigned h, unsigned r, unsigned m) {
    if (r > m) {
        throw std::domain_error("p_star: need 0 <= r <= m");
    }
    Real survive = 1;
    for (unsigned j = h + 1; j <= h + r; ++j) {
        survive *= 1 - std::pow(static_cast<Real>(2), -static_cast<Real>(j));
    }
    const Real exponent = static_cast<Real>(h + r) * static_cast<Real>(m - r);
    return gaussian_binomial_real(m, r, 2) * std::pow(static_cast<Real>(2), -exponent) * survive;
}

Real p_joint(unsigned sigma, unsigned lambda, Real phi) {
    Real poisson = std::exp(-phi);
    for (unsigned i = 1; i <= sigma; ++i) {
        poisson *= phi / static_cast<Real>(i);
    }
    Real mix = 0;
    for (unsigned r = 0; r <= sigma; ++r) {
        mix += pi_k(lambda + r) * p_star(lambda, r, sigma);
    }
    return poisson * mix;
}

std::vector<Real> corank_distribution(unsigned d_max, Real phi) {
    std::vector<Real> out(d_max + 1, 0);
    for (unsigned d = 0; d <= d_max; ++d) {
        for (unsigned sigma = 0; sigma <= d; ++sigma) {
            out[d] += p_joint(sigma, d - sigma, phi);
        }
    }
    return out;
}

std::vector<Real> poisson_distribution(unsigned d_max, Real rate) {
    std::vector<Real> out(d_max + 1, 0);
    Real p = std::exp(-rate);
    for (unsigned d = 0; d <= d_max; ++d) {
        if (d > 0) {
            p *= rate / static_cast<Real>(d);
        }
        out[d] = p;
    }
    return out;
}

Real verify_q_system(unsigned k_max) {
    if (k_max > 8) {
        throw std::domain_error("verify_q_system: k_max must be <= 8");
    }
    Real worst = 0;
    for (unsigned k = 0; k <= k_max; ++k) {
        Real sum = 0;
        for (unsigned lambda = k; lambda <= k + 60; ++lambda) {
            Real prod = 1;
            const Real two_l = std::pow(static_cast<Real>(2), static_cast<Real>(lambda));
            for (unsigned i = 0; i < k; ++i) {
                prod *= two_l - std::pow(static_cast<Real>(2), static_cast<Real>(i));
            }
            sum += pi_k(lambda) * prod;
        }
        worst = std::max(worst, std::fabs(sum - 1));
    }
    return worst;
}

}  // namespace rmlab::theory
