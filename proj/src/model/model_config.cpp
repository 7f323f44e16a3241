#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rmlab/model.hpp"

namespace rmlab {

std::string to_string(Replacement r) {
    return r == Replacement::with ? "with" : "without";
}

Replacement parse_replacement(const std::string& text) {
    if (text == "with") {
        return Replacement::with;
    }
    if (text == "without") {
        return Replacement::without;
    }
    throw std::invalid_argument("replacement must be 'with' or 'without', got '" + text + "'");
}

void ModelConfig::validate() const {
    if (n < 1) {
        throw std::invalid_argument("model: n must be >= 1");
    }
    if (r < 1) {
        throw std::invalid_argument("model: r must be >= 1");
    }
    if (s < 2) {
        throw std::invalid_argument("model: s must be >= 2");
    }
    if (replacement == Replacement::without && s - 1 > n - 1) {
        throw std::invalid_argument("model: without replacement needs s-1 <= n-1");
    }
    if (field == FieldKind::gf2) {
        return;
    }
    if (!is_prime(p) || p > PrimeFieldMatrix::kMaxModulus) {
        throw std::invalid_argument("model: field order " + std::to_string(p) + " is not a supported prime");
    }
    if (s != 3 || replacement != Replacement::without) {
        throw std::invalid_argument("model: GF(t) models are defined for s = 3 without replacement");
    }
    if (gft_model < 1 || gft_model > 3) {
        throw std::invalid_argument("model: gft_model must be 1, 2 or 3");
    }
    if (gft_model == 1) {
        return;
    }
    if (f.size() != p) {
        throw std::invalid_argument("model: entry distribution must have one weight per residue (length p)");
    }
    if (f[0] != 0.0) {
        throw std::invalid_argument("model: entry distribution puts mass on the zero residue");
    }
    for (const double w : f) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("model: entry distribution has a negative or non-finite weight");
        }
    }
    const double total = std::accumulate(f.begin(), f.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("model: entry distribution must sum to 1 within 1e-12");
    }
}

std::string ModelConfig::tag() const {
    if (field == FieldKind::gfp) {
        return "gf" + std::to_string(p) + "-model" + std::to_string(gft_model) + "-r" + std::to_string(r);
    }
    return "gf2-" + to_string(replacement) + "-r" + std::to_string(r) + "-s" + std::to_string(s);
}

std::vector<double> uniform_nonzero(Residue p) {
    std::vector<double> f(p, 1.0 / static_cast<double>(p - 1));
    f[0] = 0.0;
    return f;
}

GftParameters gft_parameters(const ModelConfig& cfg) {
    if (cfg.field != FieldKind::gfp) {
        throw std::invalid_argument("gft_parameters: configuration is not over GF(t)");
    }
    const std::size_t t = cfg.p;
    std::vector<double> f = cfg.f;
    if (cfg.gft_model == 1) {
        f.assign(t, 0.0);
        f[1 % t] = 1.0;
    }
    auto fv = [&](std::size_t residue) { return f[residue % t]; };

    GftParameters out;
    if (cfg.gft_model == 3) {
        // Any residue v on the diagonal is cancelled by a single entry -v.
        for (std::size_t i = 1; i < t; ++i) {
            out.gamma += fv(i) * fv(t - i);
        }
        for (std::size_t i = 1; i < t; ++i) {
            for (std::size_t j = 1; j < t; ++j) {
                out.alpha += fv(i) * fv(j) * fv((2 * t - i - j) % t);
            }
        }
    } else {
        // Diagonal is 1: single entry must be t-1; two entries must sum to t-1.
        out.gamma = fv(t - 1);
        for (std::size_t i = 1; i < t; ++i) {
            out.alpha += fv(i) * fv((2 * t - i - 1) % t);
        }
    }
    for (std::size_t i = 1; i < t; ++i) {
        out.beta += fv(i) * fv(t - i);
    }
    return out;
}

}  // namespace rmlab
