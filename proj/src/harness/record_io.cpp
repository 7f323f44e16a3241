#include "rmlab/record_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rmlab {

nlohmann::json record_to_json(const TrialRecord& r, bool timings) {
    nlohmann::json j{
        {"master_seed", r.master_seed},
        {"trial", r.trial},
        {"seed", r.seed},
        {"n", r.n},
        {"tag", r.tag},
        {"rank", r.rank},
        {"corank", r.corank},
        {"analyzed", r.analyzed},
        {"guard_hit", r.guard_hit},
        {"sigma", r.sigma},
        {"lambda", r.lambda},
        {"weights", r.weights},
        {"anomalies", r.anomalies},
        {"overlap_violations", r.overlap_violations},
        {"connectivity_mismatches", r.connectivity_mismatches},
        {"small_dependencies_checked", r.small_dependencies_checked},
        {"support_verification_failures", r.support_verification_failures},
        {"large_basis_matches_lambda", r.large_basis_matches_lambda},
        {"simple_at_a1", r.simple_at_a1},
        {"simple_at_window", r.simple_at_window},
        {"intersection_flags", r.intersection_flags},
    };
    if (timings) {
        j["wall_ms"] = r.wall_ms;
    }
    return j;
}

TrialRecord record_from_json(const nlohmann::json& j) {
    TrialRecord r;
    j.at("master_seed").get_to(r.master_seed);
    j.at("trial").get_to(r.trial);
    j.at("seed").get_to(r.seed);
    j.at("n").get_to(r.n);
    j.at("tag").get_to(r.tag);
    j.at("rank").get_to(r.rank);
    j.at("corank").get_to(r.corank);
    j.at("analyzed").get_to(r.analyzed);
    j.at("guard_hit").get_to(r.guard_hit);
    j.at("sigma").get_to(r.sigma);
    j.at("lambda").get_to(r.lambda);
    j.at("weights").get_to(r.weights);
    j.at("anomalies").get_to(r.anomalies);
    j.at("overlap_violations").get_to(r.overlap_violations);
    j.at("connectivity_mismatches").get_to(r.connectivity_mismatches);
    j.at("small_dependencies_checked").get_to(r.small_dependencies_checked);
    j.at("support_verification_failures").get_to(r.support_verification_failures);
    j.at("large_basis_matches_lambda").get_to(r.large_basis_matches_lambda);
    j.at("simple_at_a1").get_to(r.simple_at_a1);
    j.at("simple_at_window").get_to(r.simple_at_window);
    j.at("intersection_flags").get_to(r.intersection_flags);
    if (j.contains("wall_ms")) {
        j.at("wall_ms").get_to(r.wall_ms);
    }
    return r;
}

void write_jsonl(std::ostream& out, const std::vector<TrialRecord>& records, bool timings) {
    for (const TrialRecord& r : records) {
        out << record_to_json(r, timings).dump() << '\n';
    }
}

std::vector<TrialRecord> read_jsonl(std::istream& in) {
    std::vector<TrialRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("record line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,seed,n,tag,rank,corank,analyzed,guard_hit,sigma,lambda,codewords,anomalies\n";
    for (const TrialRecord& r : records) {
        out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.tag << ',' << r.rank << ',' << r.corank << ','
            << r.analyzed << ',' << r.guard_hit << ',' << r.sigma << ',' << r.lambda << ',' << r.weights.size()
            << ',' << r.anomalies << '\n';
    }
}

nlohmann::json summary_to_json(const CampaignSummary& s) {
    return {
        {"tag", s.tag},
        {"trials", s.trials},
        {"d_max", s.d_max},
        {"corank_counts", s.corank_counts},
        {"joint_trials", s.joint_trials},
        {"joint_counts", s.joint_counts},
        {"joint_tail", s.joint_tail},
        {"sigma_mean", s.sigma_mean},
        {"sigma_variance", s.sigma_variance},
        {"anomaly_total", s.anomaly_total},
        {"guard_hits", s.guard_hits},
        {"overlap_violations", s.overlap_violations},
        {"connectivity_mismatches", s.connectivity_mismatches},
        {"small_dependencies_checked", s.small_dependencies_checked},
        {"support_verification_failures", s.support_verification_failures},
        {"large_basis_mismatches", s.large_basis_mismatches},
        {"large_trials", s.large_trials},
        {"simple_a1_passes", s.simple_a1_passes},
        {"simple_window_passes", s.simple_window_passes},
        {"intersection_flags", s.intersection_flags},
    };
}

nlohmann::json fit_to_json(const FitReport& f) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellFit& c : f.cells) {
        cells.push_back({{"cell", c.label},
                         {"observed", c.observed},
                         {"empirical", c.empirical},
                         {"expected", c.expected},
                         {"std_error", c.std_error},
                         {"wilson_lo", c.wilson_lo},
                         {"wilson_hi", c.wilson_hi}});
    }
    nlohmann::json j{{"tag", f.tag},
                     {"trials", f.trials},
                     {"tv", f.tv},
                     {"chi_square", f.chi_square},
                     {"chi_square_dof", f.chi_square_dof},
                     {"chi_square_p", f.chi_square_p},
                     {"cells", cells}};
    j["joint_tv"] = f.joint_tv >= 0 ? nlohmann::json(f.joint_tv) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json poisson_to_json(const PoissonFit& f) {
    nlohmann::json j{{"count", f.count}, {"mean", f.mean}, {"variance", f.variance},
                     {"mean_std_error", f.mean_std_error}};
    j["dispersion"] = f.dispersion == f.dispersion ? nlohmann::json(f.dispersion) : nlohmann::json(nullptr);
    return j;
}

void write_fit_csv(std::ostream& out, const FitReport& f) {
    out << "cell,observed,empirical,expected,std_error,wilson_lo,wilson_hi\n";
    char buf[256];
    for (const CellFit& c : f.cells) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%.6f,%.6f,%.6f,%.6f,%.6f\n", c.label.c_str(), c.observed,
                      c.empirical, c.expected, c.std_error, c.wilson_lo, c.wilson_hi);
        out << buf;
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "n,trials,full_rank,full_rank_se,full_rank_limit,tv,sigma_mean,phi,anomalies\n";
    char buf[256];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%.5f,%.5f,%.5f,%.5f,%.5f,%.5f,%zu\n", r.n, r.trials, r.full_rank,
                      r.full_rank_se, r.full_rank_limit, r.tv, r.sigma_mean, r.phi, r.anomalies);
        out << buf;
    }
}

}  // namespace rmlab
