#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rmlab/model.hpp"
#include "rmlab/theory.hpp"

namespace rmlab::theory {

struct PStarEntry {
    unsigned h = 0;
    unsigned r = 0;
    unsigned m = 0;
    Real value = 0;
};

/// Every limiting quantity for one model tag, frozen at construction.
/// For GF(t) tags the corank law is Poisson(phi_t) and `joint`/`p_star` stay
/// empty.
struct TheoryTable {
    std::string tag;
    Real tolerance = 0;
    Real phi = 0;
    std::size_t phi_terms = 0;
    std::vector<Real> pi;  // pi(0..k_max)
    std::vector<PStarEntry> p_star;
    std::vector<std::vector<Real>> joint;  // joint[sigma][lambda], 0..d_max each
    std::vector<Real> corank;              // Pr(corank = d), 0..d_max

    [[nodiscard]] unsigned d_max() const { return static_cast<unsigned>(corank.size()) - 1; }
    [[nodiscard]] bool has_joint() const { return !joint.empty(); }
};

/// GF(2), r = 1, s = 3. Tag matches ModelConfig::tag() for that model.
[[nodiscard]] TheoryTable build_theory_table(Replacement model, unsigned d_max = 12, Real tol = 1e-9L);

/// GF(t) models 2 and 3: corank ~ Poisson(phi_t(gamma)). Refuses (std::domain_error) when
/// params fall outside alpha <= 2 gamma <= 1.
[[nodiscard]] TheoryTable build_gft_theory_table(const std::string& tag, const GftParameters& params,
                                                 unsigned d_max = 12, Real tol = 1e-9L);

/// Degenerate law Pr(corank = c) = 1.
[[nodiscard]] TheoryTable build_point_mass_table(const std::string& tag, unsigned corank, unsigned d_max = 12,
                                                 Real tol = 1e-9L);

/// Table for the model a config describes; throws std::invalid_argument for
/// GF(2) configs other than r = 1, s = 3.
[[nodiscard]] TheoryTable theory_for(const ModelConfig& cfg, unsigned d_max = 12, Real tol = 1e-9L);

void to_json(nlohmann::json& j, const TheoryTable& t);

/// "d,probability" rows.
[[nodiscard]] std::string corank_csv(const TheoryTable& t);
/// "sigma,lambda,probability" rows.
[[nodiscard]] std::string joint_csv(const TheoryTable& t);

}  // namespace rmlab::theory
