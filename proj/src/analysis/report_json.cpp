#include "rmlab/report_json.hpp"

namespace rmlab {

void to_json(nlohmann::json& j, const NullSpaceReport& r) {
    j = nlohmann::json{
        {"n", r.n},
        {"rank", r.rank},
        {"d", r.d},
        {"weights", r.weights},
        {"sigma", r.sigma},
        {"lambda", r.lambda},
        {"small_supports", r.small_supports},
        {"anomalies", r.anomalies},
        {"omega", r.omega},
        {"window_a", r.window_a},
        {"overlap_violations", r.overlap_violations},
        {"large_basis_size", r.large_basis_size},
        {"large_basis_matches_lambda", r.large_basis_matches_lambda},
        {"connectivity_mismatches", r.connectivity_mismatches},
        {"small_dependencies_checked", r.small_dependencies_checked},
        {"support_verification_failures", r.support_verification_failures},
        {"simple_at_a1", r.simple_at_a1},
        {"simple_at_window", r.simple_at_window},
        {"intersection_sizes", r.intersection_sizes},
        {"intersection_flags", r.intersection_flags},
    };
}

void from_json(const nlohmann::json& j, NullSpaceReport& r) {
    j.at("n").get_to(r.n);
    j.at("rank").get_to(r.rank);
    j.at("d").get_to(r.d);
    j.at("weights").get_to(r.weights);
    j.at("sigma").get_to(r.sigma);
    j.at("lambda").get_to(r.lambda);
    j.at("small_supports").get_to(r.small_supports);
    j.at("anomalies").get_to(r.anomalies);
    j.at("omega").get_to(r.omega);
    j.at("window_a").get_to(r.window_a);
    j.at("overlap_violations").get_to(r.overlap_violations);
    j.at("large_basis_size").get_to(r.large_basis_size);
    j.at("large_basis_matches_lambda").get_to(r.large_basis_matches_lambda);
    j.at("connectivity_mismatches").get_to(r.connectivity_mismatches);
    j.at("small_dependencies_checked").get_to(r.small_dependencies_checked);
    j.at("support_verification_failures").get_to(r.support_verification_failures);
    j.at("simple_at_a1").get_to(r.simple_at_a1);
    j.at("simple_at_window").get_to(r.simple_at_window);
    j.at("intersection_sizes").get_to(r.intersection_sizes);
    j.at("intersection_flags").get_to(r.intersection_flags);
}

}  // namespace rmlab
