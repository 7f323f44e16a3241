#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmlab/theory.hpp"

namespace rmlab::theory {
namespace {

Real log_choose(std::size_t n, std::size_t k) {
    return std::lgamma(static_cast<Real>(n) + 1) - std::lgamma(static_cast<Real>(k) + 1) -
           std::lgamma(static_cast<Real>(n - k) + 1);
}

Real safe_log(Real x) {
    return x > 0 ? std::log(x) : -std::numeric_limits<Real>::infinity();
}

// exponent * log(base), with 0 * log(0) = 0.
Real power_log(Real exponent, Real base) {
    return exponent == 0 ? 0 : exponent * safe_log(base);
}

}  // namespace

Real log_expected_num_deps(std::size_t n, std::size_t l, Replacement model) {
    if (l < 1 || l > n) {
        throw std::domain_error("expected_num_deps: need 1 <= l <= n");
    }
    const Real nn = static_cast<Real>(n);
    const Real ll = static_cast<Real>(l);
    const Real rest = nn - ll;
    if (model == Replacement::with) {
        const Real x = ll / nn;
        const Real y = rest / nn;
        return log_choose(n, l) + power_log(ll, 2 * x * y) + power_log(rest, x * x + y * y);
    }
    if (n < 3) {
        throw std::domain_error("expected_num_deps: without replacement needs n >= 3");
    }
    // Ordered pairs of distinct rows avoiding the owner: (n-1)(n-2).
    const Real pairs = (nn - 1) * (nn - 2);
    const Real inside = 2 * (ll - 1) * rest / pairs;
    const Real outside = (ll * (ll - 1) + (nn - 1 - ll) * (nn - 2 - ll)) / pairs;
    return log_choose(n, l) + power_log(ll, inside) + power_log(rest, outside);
}

Real expected_num_deps(std::size_t n, std::size_t l, Replacement model) {
    return std::exp(log_expected_num_deps(n, l, model));
}

Real expected_num_deps_gft(std::size_t n, std::size_t l, const GftParameters& params) {
    if (l < 1 || l > n) {
        throw std::domain_error("expected_num_deps_gft: need 1 <= l <= n");
    }
    const Real gamma = params.gamma;
    const Real alpha = params.alpha;
    const Real beta = params.beta;
    if (!(alpha <= 2 * gamma + 1e-15L && 2 * gamma <= 1 + 1e-15L)) {
        throw std::domain_error("expected_num_deps_gft: outside alpha <= 2 gamma <= 1");
    }
    const Real nn = static_cast<Real>(n);
    const Real ll = static_cast<Real>(l);
    const Real x = ll / nn;
    const Real y = (nn - ll) / nn;
    const Real in_cols = 2 * gamma * x * y + alpha * x * x;
    const Real out_cols = beta * x * x + y * y;
    return std::exp(log_choose(n, l) + power_log(ll, in_cols) + power_log(nn - ll, out_cols));
}

LRange window_range(std::size_t n, Real a) {
    const Real nn = static_cast<Real>(n);
    const Real half = std::sqrt(a * nn * std::log(nn));
    const Real lo = std::max<Real>(1, std::ceil(nn / 2 - half));
    const Real hi = std::min<Real>(nn, std::floor(nn / 2 + half));
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

Real expected_deps_in_window(std::size_t n, Real a, Replacement model) {
    const LRange range = window_range(n, a);
    Real sum = 0;
    for (std::size_t l = range.lo; l <= range.hi; ++l) {
        sum += expected_num_deps(n, l, model);
    }
    return sum;
}

Real small_dependency_limit(std::size_t l) {
    const Real ll = static_cast<Real>(l);
    return std::exp(ll * std::log(2 * ll) - 2 * ll - std::lgamma(ll + 1));
}

}  // namespace rmlab::theory
