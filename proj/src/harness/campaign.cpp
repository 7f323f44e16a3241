#include "rmlab/campaign.hpp"

#include <tuple>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "rmlab/elimination.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {

bool operator==(const TrialRecord& a, const TrialRecord& b) {
    auto key = [](const TrialRecord& r) {
        return std::tie(r.master_seed, r.trial, r.seed, r.n, r.tag, r.rank, r.corank, r.analyzed, r.guard_hit, r.sigma, r.lambda,
                        r.weights, r.anomalies, r.overlap_violations, r.connectivity_mismatches,
                        r.small_dependencies_checked, r.support_verification_failures,
                        r.large_basis_matches_lambda, r.simple_at_a1, r.simple_at_window, r.intersection_flags);
    };
    return key(a) == key(b);
}

bool analyzer_applies(const ModelConfig& cfg) {
    return cfg.field == FieldKind::gf2 && cfg.r == 1 && cfg.s == 3;
}

TrialRecord run_trial(const ModelConfig& cfg, std::uint64_t trial, const AnalyzerOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.master_seed = cfg.master_seed;
    rec.trial = trial;
    rec.seed = derive_seed(cfg.master_seed, trial);
    rec.n = cfg.n;
    rec.tag = cfg.tag();
    if (cfg.field == FieldKind::gfp) {
        rec.rank = gfp_rank(sample_gft(cfg, trial).matrix);
    } else {
        const Gf2Sample sample = sample_gf2(cfg, trial);
        if (!analyzer_applies(cfg)) {
            rec.rank = gf2_rank(sample.matrix);
        } else {
            try {
                const NullSpaceReport rep = analyze(sample.matrix, options);
                rec.analyzed = true;
                rec.rank = rep.rank;
                rec.sigma = rep.sigma;
                rec.lambda = rep.lambda;
                rec.weights = rep.weights;
                rec.anomalies = rep.anomalies.size();
                rec.overlap_violations = rep.overlap_violations;
                rec.connectivity_mismatches = rep.connectivity_mismatches;
                rec.small_dependencies_checked = rep.small_dependencies_checked;
                rec.support_verification_failures = rep.support_verification_failures;
                rec.large_basis_matches_lambda = rep.large_basis_matches_lambda;
                rec.simple_at_a1 = rep.simple_at_a1;
                rec.simple_at_window = rep.simple_at_window;
                rec.intersection_flags = rep.intersection_flags;
            } catch (const EnumerationGuardExceeded&) {
                rec.guard_hit = true;
                rec.rank = gf2_rank(sample.matrix);
            }
        }
    }
    rec.corank = cfg.n - rec.rank;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<TrialRecord> run_campaign(const ModelConfig& cfg, std::size_t trials, int workers,
                                      const AnalyzerOptions& options) {
    cfg.validate();
    if (trials == 0) {
        throw std::invalid_argument("run_campaign: trials must be >= 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("run_campaign: workers must be >= 1");
    }
    std::vector<TrialRecord> records(trials);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            records[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::uint64_t>(t), options);
        } catch (...) {
#pragma omp critical(rmlab_campaign_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

double CampaignSummary::corank_mass(std::size_t d) const {
    return trials == 0 ? 0.0 : static_cast<double>(corank_counts.at(d)) / static_cast<double>(trials);
}

CampaignSummary summarize(const std::vector<TrialRecord>& records, unsigned d_max) {
    CampaignSummary s;
    s.d_max = d_max;
    s.trials = records.size();
    s.corank_counts.assign(d_max + 2, 0);
    s.joint_counts.assign(d_max + 1, std::vector<std::size_t>(d_max + 1, 0));
    if (!records.empty()) {
        s.tag = records.front().tag;
    }
    double sum = 0;
    double sum_sq = 0;
    for (const TrialRecord& r : records) {
        if (r.tag != s.tag) {
            throw std::invalid_argument("summarize: records from more than one model");
        }
        ++s.corank_counts[std::min<std::size_t>(r.corank, d_max + 1)];
        s.anomaly_total += r.anomalies;
        s.guard_hits += r.guard_hit ? 1 : 0;
        if (!r.analyzed) {
            continue;
        }
        ++s.joint_trials;
        if (r.sigma <= d_max && r.lambda <= d_max) {
            ++s.joint_counts[r.sigma][r.lambda];
        } else {
            ++s.joint_tail;
        }
        sum += static_cast<double>(r.sigma);
        sum_sq += static_cast<double>(r.sigma) * static_cast<double>(r.sigma);
        s.overlap_violations += r.overlap_violations;
        s.connectivity_mismatches += r.connectivity_mismatches;
        s.small_dependencies_checked += r.small_dependencies_checked;
        s.support_verification_failures += r.support_verification_failures;
        s.large_basis_mismatches += r.large_basis_matches_lambda ? 0 : 1;
        if (r.lambda >= 1) {
            ++s.large_trials;
            s.simple_a1_passes += r.simple_at_a1 ? 1 : 0;
            s.simple_window_passes += r.simple_at_window ? 1 : 0;
            s.intersection_flags += r.intersection_flags;
        }
    }
    if (s.joint_trials > 0) {
        const double k = static_cast<double>(s.joint_trials);
        s.sigma_mean = sum / k;
        s.sigma_variance = s.joint_trials > 1 ? (sum_sq - k * s.sigma_mean * s.sigma_mean) / (k - 1) : 0.0;
    }
    return s;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: cell count mismatch");
    }
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sum += std::fabs(p[i] - q[i]);
    }
    return std::min(1.0, sum / 2);
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * nn)) / (1 + z2 / nn);
    const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

std::vector<double> with_tail(const std::vector<theory::Real>& cells) {
    std::vector<double> out;
    double total = 0;
    for (theory::Real v : cells) {
        out.push_back(static_cast<double>(v));
        total += static_cast<double>(v);
    }
    out.push_back(std::max(0.0, 1.0 - total));
    return out;
}

struct ChiSquare {
    double statistic = 0;
    std::size_t dof = 0;
    double p_value = 1;
};

// Adjacent cells are merged left to right until each bin expects >= 5; a
// short remainder joins the last full bin.
ChiSquare pooled_chi_square(const std::vector<std::size_t>& observed, const std::vector<double>& probs,
                            std::size_t trials) {
    std::vector<double> bin_obs;
    std::vector<double> bin_exp;
    double o = 0;
    double e = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o += static_cast<double>(observed[i]);
        e += probs[i] * static_cast<double>(trials);
        if (e >= 5) {
            bin_obs.push_back(o);
            bin_exp.push_back(e);
            o = 0;
            e = 0;
        }
    }
    if (o > 0 || e > 0) {
        if (bin_obs.empty()) {
            bin_obs.push_back(o);
            bin_exp.push_back(e);
        } else {
            bin_obs.back() += o;
            bin_exp.back() += e;
        }
    }
    ChiSquare out;
    for (std::size_t i = 0; i < bin_obs.size(); ++i) {
        if (bin_exp[i] > 0) {
            const double diff = bin_obs[i] - bin_exp[i];
            out.statistic += diff * diff / bin_exp[i];
        }
    }
    out.dof = bin_obs.empty() ? 0 : bin_obs.size() - 1;
    if (out.dof > 0) {
        out.p_value = boost::math::gamma_q(static_cast<double>(out.dof) / 2, out.statistic / 2);
    }
    return out;
}

}  // namespace

FitReport compare_to_theory(const CampaignSummary& summary, const theory::TheoryTable& table) {
    if (summary.tag != table.tag) {
        throw std::invalid_argument("compare_to_theory: summary tag '" + summary.tag + "' vs table tag '" +
                                    table.tag + "'");
    }
    if (summary.d_max != table.d_max()) {
        throw std::invalid_argument("compare_to_theory: d_max mismatch");
    }
    if (summary.trials == 0) {
        throw std::invalid_argument("compare_to_theory: empty summary");
    }
    FitReport f;
    f.tag = summary.tag;
    f.trials = summary.trials;
    const std::vector<double> expected = with_tail(table.corank);
    std::vector<double> empirical;
    const double nn = static_cast<double>(summary.trials);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::size_t obs = summary.corank_counts[i];
        empirical.push_back(static_cast<double>(obs) / nn);
        const WilsonInterval w = wilson_interval(obs, summary.trials);
        CellFit cell;
        cell.label = i <= summary.d_max ? std::to_string(i) : ">" + std::to_string(summary.d_max);
        cell.observed = obs;
        cell.empirical = empirical.back();
        cell.expected = expected[i];
        cell.std_error = std::sqrt(expected[i] * (1 - expected[i]) / nn);
        cell.wilson_lo = w.lo;
        cell.wilson_hi = w.hi;
        f.cells.push_back(cell);
    }
    f.tv = total_variation(empirical, expected);
    const ChiSquare chi = pooled_chi_square(summary.corank_counts, expected, summary.trials);
    f.chi_square = chi.statistic;
    f.chi_square_dof = chi.dof;
    f.chi_square_p = chi.p_value;

    if (table.has_joint() && summary.joint_trials > 0) {
        std::vector<double> emp;
        std::vector<double> th;
        double th_total = 0;
        const double k = static_cast<double>(summary.joint_trials);
        for (std::size_t s = 0; s <= summary.d_max; ++s) {
            for (std::size_t l = 0; l <= summary.d_max; ++l) {
                emp.push_back(static_cast<double>(summary.joint_counts[s][l]) / k);
                th.push_back(static_cast<double>(table.joint[s][l]));
                th_total += th.back();
            }
        }
        emp.push_back(static_cast<double>(summary.joint_tail) / k);
        th.push_back(std::max(0.0, 1.0 - th_total));
        f.joint_tv = total_variation(emp, th);
    }
    return f;
}

std::vector<SweepRow> n_sweep(const ModelConfig& cfg, const std::vector<std::size_t>& ns, std::size_t trials,
                              int workers, const AnalyzerOptions& options) {
    std::vector<SweepRow> rows;
    for (std::size_t n : ns) {
        ModelConfig c = cfg;
        c.n = n;
        const auto records = run_campaign(c, trials, workers, options);
        const CampaignSummary s = summarize(records);
        const theory::TheoryTable table = theory::theory_for(c);
        const FitReport fit = compare_to_theory(s, table);
        SweepRow row;
        row.n = n;
        row.trials = trials;
        row.full_rank = s.corank_mass(0);
        row.full_rank_se = fit.cells[0].std_error;
        row.full_rank_limit = static_cast<double>(table.corank[0]);
        row.tv = fit.tv;
        row.sigma_mean = s.sigma_mean;
        row.phi = static_cast<double>(table.phi);
        row.anomalies = s.anomaly_total;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rmlab
