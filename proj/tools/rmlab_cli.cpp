// rmlab: theory tables, seeded campaigns, fixture analysis, special-case
// audits and n-sweeps. Exit codes: 0 pass, 1 threshold failure, 2 usage or
// parse error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmlab/analyzer.hpp"
#include "rmlab/audits.hpp"
#include "rmlab/campaign.hpp"
#include "rmlab/elimination.hpp"
#include "rmlab/fit.hpp"
#include "rmlab/matrix_io.hpp"
#include "rmlab/model.hpp"
#include "rmlab/record_io.hpp"
#include "rmlab/report_json.hpp"
#include "rmlab/theory.hpp"
#include "rmlab/theory_table.hpp"

namespace {

using namespace rmlab;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelFlags {
    std::size_t n = 500;
    std::size_t r = 1;
    std::size_t s = 3;
    std::string replacement = "without";
    std::string field = "gf2";
    unsigned p = 3;
    int gft_model = 1;
    std::string f_dist;
    std::uint64_t seed = 1;

    void attach(CLI::App* app) {
        app->add_option("--n", n, "rows")->capture_default_str();
        app->add_option("--r", r, "columns per row index")->capture_default_str();
        app->add_option("--s", s, "column weight parameter")->capture_default_str();
        app->add_option("--replacement", replacement, "with | without")
            ->check(CLI::IsMember({"with", "without"}))
            ->capture_default_str();
        app->add_option("--field", field, "gf2 | gfp")->check(CLI::IsMember({"gf2", "gfp"}))->capture_default_str();
        app->add_option("--p", p, "prime field order for --field gfp")->capture_default_str();
        app->add_option("--gft-model", gft_model, "GF(t) model 1, 2 or 3")->capture_default_str();
        app->add_option("--f-dist", f_dist,
                        "entry weights for residues 1..p-1, comma separated (default uniform)");
        app->add_option("--seed", seed, "master seed")->capture_default_str();
    }

    [[nodiscard]] ModelConfig config() const {
        ModelConfig cfg;
        cfg.n = n;
        cfg.r = r;
        cfg.s = s;
        cfg.replacement = parse_replacement(replacement);
        cfg.master_seed = seed;
        if (field == "gfp") {
            cfg.field = FieldKind::gfp;
            cfg.p = p;
            cfg.gft_model = gft_model;
            if (gft_model != 1) {
                cfg.f = f_dist.empty() ? uniform_nonzero(p) : parse_f(f_dist, p);
            }
        } else if (!f_dist.empty()) {
            throw UsageError("--f-dist needs --field gfp");
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }

    static std::vector<double> parse_f(const std::string& text, unsigned p) {
        std::vector<double> f{0.0};
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                f.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw UsageError("--f-dist: '" + item + "' is not a number");
            }
        }
        if (f.size() != p) {
            throw UsageError("--f-dist needs p-1 = " + std::to_string(p - 1) + " weights");
        }
        return f;
    }
};

struct CampaignFlags {
    std::size_t trials = 1000;
    int workers = 1;
    std::size_t omega = 0;
    double window_a = 4.0;
    std::size_t guard = kDefaultEnumerationGuard;
    unsigned dmax = 12;

    void attach(CLI::App* app) {
        app->add_option("--trials", trials)->capture_default_str();
        app->add_option("--workers", workers, "OpenMP threads")->capture_default_str();
        app->add_option("--omega", omega, "small-weight threshold (0: ceil(ln^2 n))")->capture_default_str();
        app->add_option("--window-a", window_a, "large band n/2 +- sqrt(a n ln n)")->capture_default_str();
        app->add_option("--guard", guard, "largest null dimension to enumerate")->capture_default_str();
        app->add_option("--dmax", dmax, "last corank cell before the tail")->capture_default_str();
    }

    [[nodiscard]] AnalyzerOptions analyzer() const {
        if (trials < 1 || workers < 1 || !(window_a > 0)) {
            throw UsageError("--trials, --workers and --window-a must be positive");
        }
        return {omega, window_a, guard};
    }
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    out << text;
}

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// ---- theory ---------------------------------------------------------------

int cmd_theory(const ModelFlags& mf, bool gft, std::optional<double> gamma, std::optional<double> alpha,
               unsigned dmax, double tol, const std::string& out, const std::string& format) {
    if (!(tol > 0)) {
        throw UsageError("--tol must be positive");
    }
    theory::TheoryTable table;
    if (gft) {
        if (!gamma) {
            throw UsageError("--gft needs --gamma");
        }
        if (!(*gamma > 0) || *gamma > 1) {
            throw UsageError("--gamma must lie in (0, 1]");
        }
        GftParameters params{*gamma, alpha.value_or(0.0), 0.0};
        if (alpha && (*alpha > 2 * *gamma || 2 * *gamma > 1)) {
            std::cerr << "refusing: alpha <= 2 gamma <= 1 does not hold\n";
            return kUsage;
        }
        table.tag = "gft-gamma" + fixed(*gamma, 4);
        table.tolerance = tol;
        const auto phi = theory::phi_t(params.gamma, tol);
        table.phi = phi.value;
        table.phi_terms = phi.terms;
        table.corank = theory::poisson_distribution(dmax, table.phi);
    } else {
        const ModelConfig cfg = mf.config();
        try {
            table = theory::theory_for(cfg, dmax, tol);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }

    std::cout << "tag            " << table.tag << '\n';
    std::cout << "phi            " << fixed(static_cast<double>(table.phi)) << "  (" << table.phi_terms
              << " terms)\n";
    if (!table.pi.empty()) {
        std::cout << "pi(0)          " << fixed(static_cast<double>(table.pi[0])) << '\n';
    }
    std::cout << "Pr(full rank)  " << fixed(static_cast<double>(table.corank[0])) << '\n';

    if (!out.empty()) {
        if (format == "csv") {
            emit(out, table.has_joint() ? theory::corank_csv(table) + "\n" + theory::joint_csv(table)
                                        : theory::corank_csv(table));
        } else {
            json j = table;
            emit(out, j.dump(2) + "\n");
        }
    }
    return kPass;
}

// ---- simulate -------------------------------------------------------------

struct Thresholds {
    bool check = false;
    double max_tv = 0.02;
    double max_joint_tv = 0.03;
    double min_fraction = 0.99;
};

int cmd_simulate(const ModelFlags& mf, const CampaignFlags& cf, const Thresholds& th, const std::string& records,
                 const std::string& out, const std::string& format, bool timings) {
    const ModelConfig cfg = mf.config();
    const AnalyzerOptions opts = cf.analyzer();
    const auto recs = run_campaign(cfg, cf.trials, cf.workers, opts);
    if (!records.empty()) {
        std::ostringstream ss;
        if (format == "csv") {
            write_records_csv(ss, recs);
        } else {
            write_jsonl(ss, recs, timings);
        }
        emit(records, ss.str());
    }
    const CampaignSummary summary = summarize(recs, cf.dmax);
    json report{{"master_seed", cfg.master_seed}, {"config_tag", cfg.tag()}, {"summary", summary_to_json(summary)}};

    std::optional<FitReport> fit;
    std::optional<theory::TheoryTable> table;
    try {
        table = theory::theory_for(cfg, cf.dmax);
    } catch (const std::exception&) {
        // No limiting law for this model; only the raw summary is reported.
    }
    if (table) {
        fit = compare_to_theory(summary, *table);
        report["fit"] = fit_to_json(*fit);
    }
    if (summary.joint_trials >= kMinPoissonRecords) {
        report["sigma_fit"] = poisson_to_json(poisson_fit(recs));
    }

    std::vector<std::string> failures;
    if (th.check) {
        if (summary.anomaly_total > 0) {
            failures.push_back("anomalous codeword weights: " + std::to_string(summary.anomaly_total));
        }
        if (fit) {
            if (fit->tv >= th.max_tv) {
                failures.push_back("corank TV " + fixed(fit->tv) + " >= " + fixed(th.max_tv));
            }
            if (fit->joint_tv >= 0 && fit->joint_tv >= th.max_joint_tv) {
                failures.push_back("joint TV " + fixed(fit->joint_tv) + " >= " + fixed(th.max_joint_tv));
            }
            const CellFit& c0 = fit->cells[0];
            if (c0.std_error > 0 && std::fabs(c0.empirical - c0.expected) > 3 * c0.std_error) {
                failures.push_back("Pr(corank=0) " + fixed(c0.empirical) + " outside 3 SE of " +
                                   fixed(c0.expected));
            }
        } else if (cfg.field == FieldKind::gf2 && cfg.r >= 2 && (cfg.s == 2 || cfg.s == 3)) {
            const std::size_t target = cfg.s == 2 ? 1 : 0;
            const double frac = summary.corank_mass(target);
            if (frac < th.min_fraction) {
                failures.push_back("corank=" + std::to_string(target) + " fraction " + fixed(frac) + " < " +
                                   fixed(th.min_fraction));
            }
        }
    }
    report["checks"] = {{"enabled", th.check}, {"failures", failures}};

    if (format == "csv" && fit) {
        std::ostringstream ss;
        write_fit_csv(ss, *fit);
        emit(out, ss.str());
    } else {
        emit(out, report.dump(2) + "\n");
    }
    std::cerr << "master_seed=" << cfg.master_seed << " trials=" << summary.trials
              << " Pr(corank=0)=" << fixed(summary.corank_mass(0));
    if (fit) {
        std::cerr << " theory=" << fixed(fit->cells[0].expected) << " TV=" << fixed(fit->tv);
    }
    std::cerr << " anomalies=" << summary.anomaly_total << '\n';
    for (const auto& f : failures) {
        std::cerr << "FAIL: " << f << '\n';
    }
    return failures.empty() ? kPass : kFail;
}

// ---- analyze --------------------------------------------------------------

int cmd_analyze(const ModelFlags& mf, const CampaignFlags& cf, const std::string& matrix_path,
                const std::string& records_path, std::optional<std::uint64_t> trial, const std::string& out) {
    const AnalyzerOptions opts = cf.analyzer();
    if (!matrix_path.empty() == !records_path.empty()) {
        throw UsageError("analyze needs exactly one of --matrix or --records");
    }
    if (!matrix_path.empty()) {
        std::ifstream in(matrix_path);
        if (!in) {
            throw UsageError("cannot read " + matrix_path);
        }
        std::optional<AnyMatrix> parsed;
        try {
            parsed = read_matrix(in);
        } catch (const MatrixParseError& e) {
            std::cerr << matrix_path << ':' << e.line() << ':' << e.column() << ": " << e.what() << '\n';
            return kUsage;
        }
        const AnyMatrix& m = *parsed;
        json j;
        if (const auto* bm = std::get_if<BitMatrix>(&m)) {
            try {
                j = analyze(*bm, opts);
            } catch (const EnumerationGuardExceeded&) {
                const std::size_t rank = gf2_rank(*bm);
                j = {{"n", bm->n_rows()}, {"rank", rank}, {"d", bm->n_rows() - rank}, {"guard_hit", true}};
            }
        } else {
            const auto& pm = std::get<PrimeFieldMatrix>(m);
            const std::size_t rank = gfp_rank(pm);
            j = {{"n", pm.n_rows()}, {"rank", rank}, {"d", pm.n_rows() - rank}, {"modulus", pm.modulus()}};
        }
        emit(out, j.dump(2) + "\n");
        return kPass;
    }

    // Replay: re-sample every stored trial (or just --trial) and compare.
    std::ifstream in(records_path);
    if (!in) {
        throw UsageError("cannot read " + records_path);
    }
    std::vector<TrialRecord> stored;
    try {
        stored = read_jsonl(in);
    } catch (const std::exception& e) {
        std::cerr << records_path << ": " << e.what() << '\n';
        return kUsage;
    }
    ModelConfig cfg = mf.config();
    std::size_t mismatches = 0;
    std::size_t replayed = 0;
    json reports = json::array();
    for (const TrialRecord& rec : stored) {
        if (trial && rec.trial != *trial) {
            continue;
        }
        cfg.master_seed = rec.master_seed;
        cfg.n = rec.n;
        if (cfg.tag() != rec.tag) {
            throw UsageError("record tag " + rec.tag + " does not match the model flags (" + cfg.tag() + ")");
        }
        const TrialRecord again = run_trial(cfg, rec.trial, opts);
        ++replayed;
        const bool same = again == rec;
        mismatches += same ? 0 : 1;
        json r = record_to_json(again);
        r["matches_stored"] = same;
        if (trial && cfg.field == FieldKind::gf2 && analyzer_applies(cfg) && !again.guard_hit) {
            r["report"] = analyze(sample_gf2(cfg, rec.trial).matrix, opts);
        }
        reports.push_back(r);
    }
    if (replayed == 0) {
        throw UsageError("no matching records in " + records_path);
    }
    emit(out, json{{"replayed", replayed}, {"mismatches", mismatches}, {"records", reports}}.dump(2) + "\n");
    return mismatches == 0 ? kPass : kFail;
}

// ---- sample ---------------------------------------------------------------

int cmd_sample(const ModelFlags& mf, std::uint64_t trial, const std::string& out) {
    const ModelConfig cfg = mf.config();
    std::ostringstream ss;
    const std::vector<std::string> comments{"tag " + cfg.tag(), "master_seed " + std::to_string(cfg.master_seed),
                                            "trial " + std::to_string(trial)};
    if (cfg.field == FieldKind::gfp) {
        write_matrix(ss, sample_gft(cfg, trial).matrix, comments);
    } else {
        write_matrix(ss, sample_gf2(cfg, trial).matrix, comments);
    }
    emit(out, ss.str());
    return kPass;
}

// ---- audit ----------------------------------------------------------------

int cmd_audit(const std::string& family, std::size_t n, std::size_t trials, std::uint64_t seed, int workers,
              const std::string& out) {
    if (trials < 1 || workers < 1) {
        throw UsageError("--trials and --workers must be positive");
    }
    std::vector<AuditFamily> families;
    if (family == "all") {
        families = {AuditFamily::r1s2, AuditFamily::r2s2, AuditFamily::r2s3, AuditFamily::gf3_model1};
    } else {
        try {
            families.push_back(parse_audit_family(family));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    json reports = json::array();
    bool pass = true;
    for (AuditFamily f : families) {
        const AuditReport rep = special_case_audit(f, n, trials, seed, workers);
        pass = pass && rep.pass;
        reports.push_back({{"family", to_string(f)},
                           {"tag", rep.tag},
                           {"n", rep.n},
                           {"trials", rep.trials},
                           {"master_seed", rep.seed},
                           {"violations", rep.violations},
                           {"hits", rep.hits},
                           {"fraction", rep.fraction},
                           {"threshold", rep.threshold},
                           {"pass", rep.pass}});
        std::cerr << (rep.pass ? "PASS " : "FAIL ") << to_string(f) << " fraction=" << fixed(rep.fraction, 4)
                  << " violations=" << rep.violations << '\n';
    }
    emit(out, reports.dump(2) + "\n");
    return pass ? kPass : kFail;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const ModelFlags& mf, const CampaignFlags& cf, const std::vector<std::size_t>& ns,
              const std::string& out, const std::string& format) {
    const ModelConfig cfg = mf.config();
    if (!analyzer_applies(cfg)) {
        throw UsageError("sweep compares against the GF(2), r = 1, s = 3 limit");
    }
    const auto rows = n_sweep(cfg, ns, cf.trials, cf.workers, cf.analyzer());
    if (format == "json") {
        json j = json::array();
        for (const SweepRow& r : rows) {
            j.push_back({{"n", r.n},
                         {"trials", r.trials},
                         {"full_rank", r.full_rank},
                         {"full_rank_se", r.full_rank_se},
                         {"full_rank_limit", r.full_rank_limit},
                         {"tv", r.tv},
                         {"sigma_mean", r.sigma_mean},
                         {"phi", r.phi},
                         {"anomalies", r.anomalies}});
        }
        emit(out, json{{"master_seed", cfg.master_seed}, {"rows", j}}.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        ss << "# master_seed " << cfg.master_seed << '\n';
        write_sweep_csv(ss, rows);
        emit(out, ss.str());
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random finite-field matrix laboratory"};
    app.require_subcommand(1);

    std::string out;
    std::string format = "json";
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--out", out, "output file (default stdout)");
        sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };

    ModelFlags mf;
    CampaignFlags cf;

    auto* theory_cmd = app.add_subcommand("theory", "limiting constants and tables");
    mf.attach(theory_cmd);
    bool gft = false;
    std::optional<double> gamma;
    std::optional<double> alpha;
    double tol = 1e-9;
    theory_cmd->add_flag("--gft", gft, "GF(t) Poisson law from --gamma");
    theory_cmd->add_option("--gamma", gamma, "cancellation probability gamma in (0, 1]");
    theory_cmd->add_option("--alpha", alpha, "three-way cancellation probability (refuses alpha > 2 gamma)");
    theory_cmd->add_option("--dmax", cf.dmax)->capture_default_str();
    theory_cmd->add_option("--tol", tol)->capture_default_str();
    add_io(theory_cmd);

    auto* sim_cmd = app.add_subcommand("simulate", "seeded Monte Carlo campaign");
    mf.attach(sim_cmd);
    cf.attach(sim_cmd);
    Thresholds th;
    std::string records;
    bool timings = false;
    sim_cmd->add_option("--records", records, "write per-trial records (JSON lines, or CSV with --format csv)");
    sim_cmd->add_flag("--check", th.check, "exit 1 when an acceptance threshold fails");
    sim_cmd->add_option("--max-tv", th.max_tv)->capture_default_str();
    sim_cmd->add_option("--max-joint-tv", th.max_joint_tv)->capture_default_str();
    sim_cmd->add_option("--min-fraction", th.min_fraction, "for r >= 2 models")->capture_default_str();
    sim_cmd->add_flag("--timings", timings, "include wall time in records");
    add_io(sim_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "null-space report for a fixture or replayed records");
    mf.attach(analyze_cmd);
    cf.attach(analyze_cmd);
    std::string matrix_path;
    std::optional<std::uint64_t> trial;
    analyze_cmd->add_option("--matrix", matrix_path, "matrix fixture");
    analyze_cmd->add_option("--records", records, "JSON-lines records to replay");
    analyze_cmd->add_option("--trial", trial, "replay only this trial and print its full report");
    analyze_cmd->add_option("--out", out, "output file (default stdout)");

    auto* sample_cmd = app.add_subcommand("sample", "write one sampled matrix as a fixture");
    mf.attach(sample_cmd);
    std::uint64_t sample_trial = 0;
    sample_cmd->add_option("--trial", sample_trial)->capture_default_str();
    sample_cmd->add_option("--out", out, "output file (default stdout)");

    auto* audit_cmd = app.add_subcommand("audit", "special-case audits");
    std::string family = "all";
    std::size_t audit_n = 500;
    std::size_t audit_trials = 1000;
    std::uint64_t audit_seed = 1;
    int audit_workers = 1;
    audit_cmd->add_option("--family", family, "r1s2 | r2s2 | r2s3 | gf3-model1 | all")->capture_default_str();
    audit_cmd->add_option("--n", audit_n)->capture_default_str();
    audit_cmd->add_option("--trials", audit_trials)->capture_default_str();
    audit_cmd->add_option("--seed", audit_seed)->capture_default_str();
    audit_cmd->add_option("--workers", audit_workers)->capture_default_str();
    audit_cmd->add_option("--out", out, "output file (default stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "finite-n convergence report");
    mf.attach(sweep_cmd);
    cf.attach(sweep_cmd);
    std::vector<std::size_t> ns{250, 500, 1000, 2000};
    sweep_cmd->add_option("--ns", ns, "row counts")->delimiter(',')->capture_default_str();
    add_io(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*theory_cmd) {
            return cmd_theory(mf, gft, gamma, alpha, cf.dmax, tol, out, format);
        }
        if (*sim_cmd) {
            return cmd_simulate(mf, cf, th, records, out, format, timings);
        }
        if (*analyze_cmd) {
            return cmd_analyze(mf, cf, matrix_path, records, trial, out);
        }
        if (*sample_cmd) {
            return cmd_sample(mf, sample_trial, out);
        }
        if (*audit_cmd) {
            return cmd_audit(family, audit_n, audit_trials, audit_seed, audit_workers, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(mf, cf, ns, out, format);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
