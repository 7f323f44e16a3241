#include "rmlab/theory_table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rmlab::theory {
namespace {

std::vector<Real> pi_table(unsigned d_max, Real tol) {
    // pi(k) <= 4 * 2^(-k^2) decays far faster than tol; extend past d_max only
    // if the tail is still visible.
    std::vector<Real> out;
    for (unsigned k = 0;; ++k) {
        const Real v = pi_k(k);
        out.push_back(v);
        if (k >= d_max && v < tol * 1e-3L) {
            break;
        }
    }
    return out;
}

std::string fmt(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

}  // namespace

TheoryTable build_theory_table(Replacement model, unsigned d_max, Real tol) {
    TheoryTable t;
    ModelConfig cfg;
    cfg.replacement = model;
    t.tag = cfg.tag();
    t.tolerance = tol;
    const SeriesValue f = phi(model, tol);
    t.phi = f.value;
    t.phi_terms = f.terms;
    t.pi = pi_table(d_max, tol);
    for (unsigned k = 0; k <= 8; ++k) {
        for (unsigned m = 0; m <= 8; ++m) {
            for (unsigned r = 0; r <= std::min(k, m); ++r) {
                t.p_star.push_back({k - r, r, m, p_star(k - r, r, m)});
            }
        }
    }
    t.joint.assign(d_max + 1, std::vector<Real>(d_max + 1, 0));
    for (unsigned s = 0; s <= d_max; ++s) {
        for (unsigned l = 0; l <= d_max; ++l) {
            t.joint[s][l] = p_joint(s, l, t.phi);
        }
    }
    t.corank = corank_distribution(d_max, t.phi);
    return t;
}

TheoryTable build_gft_theory_table(const std::string& tag, const GftParameters& params, unsigned d_max,
                                   Real tol) {
    if (!(params.alpha <= 2 * params.gamma + 1e-15 && 2 * params.gamma <= 1 + 1e-15)) {
        throw std::domain_error("GF(t) parameters outside alpha <= 2 gamma <= 1");
    }
    TheoryTable t;
    t.tag = tag;
    t.tolerance = tol;
    if (params.gamma > 0) {
        const SeriesValue f = phi_t(params.gamma, tol);
        t.phi = f.value;
        t.phi_terms = f.terms;
    }
    t.corank = poisson_distribution(d_max, t.phi);
    return t;
}

TheoryTable build_point_mass_table(const std::string& tag, unsigned corank, unsigned d_max, Real tol) {
    TheoryTable t;
    t.tag = tag;
    t.tolerance = tol;
    t.corank.assign(std::max(d_max, corank) + 1, 0);
    t.corank[corank] = 1;
    return t;
}

TheoryTable theory_for(const ModelConfig& cfg, unsigned d_max, Real tol) {
    cfg.validate();
    if (cfg.field == FieldKind::gfp && cfg.gft_model == 1) {
        // All-unit columns: over GF(3) every column sums to zero, otherwise full rank.
        return build_point_mass_table(cfg.tag(), cfg.p == 3 ? 1 : 0, d_max, tol);
    }
    if (cfg.field == FieldKind::gfp) {
        return build_gft_theory_table(cfg.tag(), gft_parameters(cfg), d_max, tol);
    }
    if (cfg.r != 1 || cfg.s != 3) {
        throw std::invalid_argument("no limiting table for GF(2) models other than r = 1, s = 3");
    }
    return build_theory_table(cfg.replacement, d_max, tol);
}

void to_json(nlohmann::json& j, const TheoryTable& t) {
    j = nlohmann::json{{"tag", t.tag},
                       {"tolerance", static_cast<double>(t.tolerance)},
                       {"phi", static_cast<double>(t.phi)},
                       {"phi_terms", t.phi_terms}};
    auto& pi = j["pi"] = nlohmann::json::array();
    for (Real v : t.pi) {
        pi.push_back(static_cast<double>(v));
    }
    auto& ps = j["p_star"] = nlohmann::json::array();
    for (const auto& e : t.p_star) {
        ps.push_back({{"h", e.h}, {"r", e.r}, {"m", e.m}, {"value", static_cast<double>(e.value)}});
    }
    auto& joint = j["joint"] = nlohmann::json::array();
    for (const auto& row : t.joint) {
        auto& out = joint.emplace_back(nlohmann::json::array());
        for (Real v : row) {
            out.push_back(static_cast<double>(v));
        }
    }
    auto& corank = j["corank"] = nlohmann::json::array();
    for (Real v : t.corank) {
        corank.push_back(static_cast<double>(v));
    }
}

std::string corank_csv(const TheoryTable& t) {
    std::ostringstream out;
    out << "d,probability\n";
    for (std::size_t d = 0; d < t.corank.size(); ++d) {
        out << d << ',' << fmt(t.corank[d]) << '\n';
    }
    return out.str();
}

std::string joint_csv(const TheoryTable& t) {
    std::ostringstream out;
    out << "sigma,lambda,probability\n";
    for (std::size_t s = 0; s < t.joint.size(); ++s) {
        for (std::size_t l = 0; l < t.joint[s].size(); ++l) {
            out << s << ',' << l << ',' << fmt(t.joint[s][l]) << '\n';
        }
    }
    return out.str();
}

}  // namespace rmlab::theory
