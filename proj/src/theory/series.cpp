#include <cmath>
#include <stdexcept>

#include "rmlab/theory.hpp"

namespace rmlab::theory {
namespace {

// x^l * sum_{j=0}^{top} l^j / j!, accumulated term by term.
Real scaled_partial_exp(Real x, unsigned l, int top) {
    if (top < 0) {
        return 0;
    }
    const Real scale = std::pow(x, static_cast<Real>(l));
    Real term = scale;
    Real sum = term;
    for (int j = 1; j <= top; ++j) {
        term *= static_cast<Real>(l) / static_cast<Real>(j);
        sum += term;
    }
    return sum;
}

// l-th term of the rate series; with replacement the inner sum runs to l-1
// and l starts at 1, without replacement to l-2 from l = 2.
Real rate_term(Real x, unsigned l, bool with_replacement) {
    const int top = with_replacement ? static_cast<int>(l) - 1 : static_cast<int>(l) - 2;
    return scaled_partial_exp(x, l, top) / static_cast<Real>(l);
}

SeriesValue adaptive(Real x, bool with_replacement, Real tol) {
    if (!(tol > 0)) {
        throw std::domain_error("series tolerance must be positive");
    }
    const Real stop = tol / 100;
    SeriesValue out;
    for (unsigned l = with_replacement ? 1 : 2;; ++l) {
        const Real t = rate_term(x, l, with_replacement);
        out.value += t;
        ++out.terms;
        // Terms shrink geometrically (ratio -> 2 gamma / e) once l passes 1.
        if (t < stop || out.terms > 100000) {
            break;
        }
    }
    return out;
}

Real partial(Real x, bool with_replacement, std::size_t terms) {
    Real sum = 0;
    unsigned l = with_replacement ? 1 : 2;
    for (std::size_t i = 0; i < terms; ++i, ++l) {
        sum += rate_term(x, l, with_replacement);
    }
    return sum;
}

Real base_ratio() {
    return 2 * std::exp(static_cast<Real>(-2));
}

}  // namespace

SigmaKappa sigma_kappa(unsigned s, Replacement model) {
    const bool with = model == Replacement::with;
    if (s < (with ? 1u : 2u)) {
        throw std::domain_error("sigma_kappa: s below the model minimum");
    }
    SigmaKappa out;
    out.sigma = scaled_partial_exp(1, s, with ? static_cast<int>(s) - 1 : static_cast<int>(s) - 2);
    // (s-1)! / base^s computed as a running product to stay in range.
    const Real base = with ? static_cast<Real>(s) : static_cast<Real>(s - 1);
    Real ratio = 1 / base;
    for (unsigned j = 1; j < s; ++j) {
        ratio *= static_cast<Real>(j) / base;
    }
    out.kappa = ratio * out.sigma;
    return out;
}

SeriesValue phi(Replacement model, Real tol) {
    return adaptive(base_ratio(), model == Replacement::with, tol);
}

Real phi_partial(Replacement model, std::size_t terms) {
    return partial(base_ratio(), model == Replacement::with, terms);
}

SeriesValue phi_t(Real gamma, Real tol) {
    if (!(gamma > 0) || gamma > 1) {
        throw std::domain_error("phi_t: gamma must lie in (0, 1]");
    }
    return adaptive(gamma * base_ratio(), false, tol);
}

Real phi_t_partial(Real gamma, std::size_t terms) {
    if (!(gamma > 0) || gamma > 1) {
        throw std::domain_error("phi_t: gamma must lie in (0, 1]");
    }
    return partial(gamma * base_ratio(), false, terms);
}

Real pi_k(unsigned k, Real q) {
    if (!(q > 1)) {
        throw std::domain_error("pi_k: q must exceed 1");
    }
    Real tail = 1;
    Real qj = std::pow(q, -static_cast<Real>(k + 1));
    for (unsigned j = k + 1; qj >= static_cast<Real>(1e-15); ++j) {
        tail *= 1 - qj;
        qj /= q;
    }
    tail *= 1 - qj;  // first factor within 1e-15 of one; later ones are negligible
    Real head = 1;
    Real qi = 1 / q;
    for (unsigned i = 1; i <= k; ++i) {
        head *= 1 - qi;
        qi /= q;
    }
    const Real kk = static_cast<Real>(k);
    return tail / head * std::pow(q, -kk * kk);
}

}  // namespace rmlab::theory
