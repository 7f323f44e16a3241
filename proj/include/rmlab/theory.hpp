#pragma once

// Closed-form limiting quantities for the r = 1, s = 3 model over GF(2) and
// the GF(t) variants. Everything is evaluated in long double; series and
// infinite products stop on explicit term-size bounds and report how many
// terms they used.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rmlab/model.hpp"

namespace rmlab::theory {

using Real = long double;

struct SeriesValue {
    Real value = 0;
    std::size_t terms = 0;
};

/// sigma_s and kappa_s. With replacement (s >= 1):
///   sigma_s = sum_{j<s} s^j/j!,  kappa_s = (s-1)! sigma_s / s^s,
/// kappa_s being the probability that a uniform random mapping on s points is
/// connected. Without replacement (s >= 2) the mapping has no fixed points:
///   sigma_s = sum_{j<=s-2} s^j/j!,  kappa_s = (s-1)! sigma_s / (s-1)^s.
struct SigmaKappa {
    Real sigma = 0;
    Real kappa = 0;
};
[[nodiscard]] SigmaKappa sigma_kappa(unsigned s, Replacement model);

/// Poisson rate of small fundamental dependencies,
///   sum_l (1/l) (2 gamma e^-2)^l sigma_l,
/// with gamma = 1. Summation stops once a term drops below tol/100.
[[nodiscard]] SeriesValue phi(Replacement model, Real tol = 1e-12L);
/// Same series, first `terms` terms exactly.
[[nodiscard]] Real phi_partial(Replacement model, std::size_t terms);

/// GF(t) rate: the without-replacement series with 2e^-2 scaled by gamma.
/// Throws std::domain_error unless 0 < gamma <= 1.
[[nodiscard]] SeriesValue phi_t(Real gamma, Real tol = 1e-12L);
[[nodiscard]] Real phi_t_partial(Real gamma, std::size_t terms);

/// Limiting law of the large-dependency dimension over GF(q):
///   pi(k) = prod_{j>k}(1 - q^-j) / prod_{j=1..k}(1 - q^-j) * q^(-k^2).
/// The infinite product stops once q^-j < 1e-15.
[[nodiscard]] Real pi_k(unsigned k, Real q = 2);

/// Exact Gaussian binomial [m r]_q in product form. Throws std::domain_error
/// when r > m and std::overflow_error when the value leaves 64 bits.
[[nodiscard]] std::uint64_t gaussian_binomial(unsigned m, unsigned r, std::uint64_t q);
/// Floating-point product form, for arguments too large for 64 bits.
[[nodiscard]] Real gaussian_binomial_real(unsigned m, unsigned r, Real q);

/// Probability that exactly h of h + r large dependencies survive m small ones:
///   [m r]_2 2^-((h+r)(m-r)) prod_{j=h+1..h+r}(1 - 2^-j).
/// Throws std::domain_error when r > m.
[[nodiscard]] Real p_star(unsigned h, unsigned r, unsigned m);

/// Joint limiting probability of (small dimension sigma, large dimension lambda):
///   phi^sigma e^-phi / sigma! * sum_{r<=sigma} pi(lambda + r) P*(lambda, lambda + r; sigma).
[[nodiscard]] Real p_joint(unsigned sigma, unsigned lambda, Real phi);

/// Pr(corank = d) = sum_{sigma<=d} P(sigma, d - sigma), for d = 0..d_max.
[[nodiscard]] std::vector<Real> corank_distribution(unsigned d_max, Real phi);

/// Poisson(rate) masses for d = 0..d_max (GF(t) models 2 and 3).
[[nodiscard]] std::vector<Real> poisson_distribution(unsigned d_max, Real rate);

/// log E X_l, the expected number of l-row dependencies at finite n, and the
/// value itself. Returns -inf / 0 where a factor vanishes (l = n with
/// replacement, l = 1 without). Requires 1 <= l <= n (and n >= 3 without
/// replacement); throws std::domain_error otherwise.
[[nodiscard]] Real log_expected_num_deps(std::size_t n, std::size_t l, Replacement model);
[[nodiscard]] Real expected_num_deps(std::size_t n, std::size_t l, Replacement model);

/// GF(t) variant with per-column probabilities gamma, alpha, beta. Refuses
/// (std::domain_error) outside alpha <= 2 gamma <= 1.
[[nodiscard]] Real expected_num_deps_gft(std::size_t n, std::size_t l, const GftParameters& params);

/// Inclusive l-range of the window n/2 +- sqrt(a n ln n), clipped to [1, n].
struct LRange {
    std::size_t lo = 1;
    std::size_t hi = 0;
};
[[nodiscard]] LRange window_range(std::size_t n, Real a);

/// Sum of E X_l over the window.
[[nodiscard]] Real expected_deps_in_window(std::size_t n, Real a, Replacement model);

/// (2l)^l e^-2l / l!, the small-l limit of E X_l with replacement.
[[nodiscard]] Real small_dependency_limit(std::size_t l);

/// max over k <= k_max of |sum_{lambda=k}^{k+60} pi(lambda) prod_{i<k}(2^lambda - 2^i) - 1|.
[[nodiscard]] Real verify_q_system(unsigned k_max);

}  // namespace rmlab::theory
