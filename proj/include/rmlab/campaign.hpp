#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rmlab/analyzer.hpp"
#include "rmlab/model.hpp"
#include "rmlab/theory_table.hpp"

namespace rmlab {

/// One sampled matrix, reduced to what the statistics need. `analyzed` is
/// false for models the null-space analyzer does not cover (anything but
/// GF(2), r = 1, s = 3) and for guard hits; sigma, lambda and the audit
/// fields are then zero.
struct TrialRecord {
    std::uint64_t master_seed = 0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string tag;
    std::size_t rank = 0;
    std::size_t corank = 0;
    bool analyzed = false;
    bool guard_hit = false;
    std::size_t sigma = 0;
    std::size_t lambda = 0;
    std::vector<std::size_t> weights;
    std::size_t anomalies = 0;
    std::size_t overlap_violations = 0;
    std::size_t connectivity_mismatches = 0;
    std::size_t small_dependencies_checked = 0;
    std::size_t support_verification_failures = 0;
    bool large_basis_matches_lambda = true;
    bool simple_at_a1 = true;
    bool simple_at_window = true;
    std::size_t intersection_flags = 0;
    double wall_ms = 0;  // excluded from equality and, by default, from output

    friend bool operator==(const TrialRecord& a, const TrialRecord& b);
};

/// Analysis runs only where the small/large theory applies.
[[nodiscard]] bool analyzer_applies(const ModelConfig& cfg);

/// Sample, eliminate and (if applicable) analyze trial `trial` of `cfg`.
[[nodiscard]] TrialRecord run_trial(const ModelConfig& cfg, std::uint64_t trial,
                                    const AnalyzerOptions& options = {});

/// Trials 0..trials-1 on `workers` OpenMP threads. Records come back ordered
/// by trial index and do not depend on the worker count.
[[nodiscard]] std::vector<TrialRecord> run_campaign(const ModelConfig& cfg, std::size_t trials, int workers,
                                                    const AnalyzerOptions& options = {});

struct CampaignSummary {
    std::string tag;
    std::size_t trials = 0;
    unsigned d_max = 12;
    /// corank_counts[d] for d <= d_max; the last slot counts corank > d_max.
    std::vector<std::size_t> corank_counts;
    /// Trials entering the joint histogram (analyzed, no guard hit).
    std::size_t joint_trials = 0;
    /// joint_counts[sigma][lambda] for both <= d_max; joint_tail counts the rest.
    std::vector<std::vector<std::size_t>> joint_counts;
    std::size_t joint_tail = 0;
    double sigma_mean = 0;
    double sigma_variance = 0;
    std::size_t anomaly_total = 0;
    std::size_t guard_hits = 0;
    std::size_t overlap_violations = 0;
    std::size_t connectivity_mismatches = 0;
    std::size_t small_dependencies_checked = 0;
    std::size_t support_verification_failures = 0;
    std::size_t large_basis_mismatches = 0;
    std::size_t large_trials = 0;  // analyzed trials with lambda >= 1
    std::size_t simple_a1_passes = 0;
    std::size_t simple_window_passes = 0;
    std::size_t intersection_flags = 0;

    [[nodiscard]] double corank_mass(std::size_t d) const;
};

/// Deterministic fold over the records in the given order.
[[nodiscard]] CampaignSummary summarize(const std::vector<TrialRecord>& records, unsigned d_max = 12);

struct CellFit {
    std::string label;  // "0".."d_max" or ">d_max"
    std::size_t observed = 0;
    double empirical = 0;
    double expected = 0;  // theoretical probability
    double std_error = 0;  // sqrt(p (1 - p) / N) at the theoretical p
    double wilson_lo = 0;
    double wilson_hi = 0;
};

struct FitReport {
    std::string tag;
    std::size_t trials = 0;
    double tv = 0;
    double joint_tv = -1;  // -1 when the table or summary has no joint grid
    double chi_square = 0;
    std::size_t chi_square_dof = 0;
    double chi_square_p = 1;
    std::vector<CellFit> cells;
};

/// Total variation over corank cells 0..d_max plus the tail, chi-square with
/// cells pooled until the expected count reaches 5, 95% Wilson intervals.
/// Throws std::invalid_argument on mismatched tags or d_max.
[[nodiscard]] FitReport compare_to_theory(const CampaignSummary& summary, const theory::TheoryTable& table);

/// Total variation between two distributions given on the same cells.
[[nodiscard]] double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct WilsonInterval {
    double lo = 0;
    double hi = 1;
};
[[nodiscard]] WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct SweepRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    double full_rank = 0;
    double full_rank_se = 0;
    double full_rank_limit = 0;
    double tv = 0;
    double sigma_mean = 0;
    double phi = 0;
    std::size_t anomalies = 0;
};

/// Finite-n convergence report: one campaign per n, same seed and options.
[[nodiscard]] std::vector<SweepRow> n_sweep(const ModelConfig& cfg, const std::vector<std::size_t>& ns,
                                            std::size_t trials, int workers, const AnalyzerOptions& options = {});

}  // namespace rmlab
