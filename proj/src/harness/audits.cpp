#include "rmlab/audits.hpp"

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <vector>

#include "rmlab/elimination.hpp"

namespace rmlab {

std::string to_string(AuditFamily f) {
    switch (f) {
        case AuditFamily::r1s2:
            return "r1s2";
        case AuditFamily::r2s2:
            return "r2s2";
        case AuditFamily::r2s3:
            return "r2s3";
        case AuditFamily::gf3_model1:
            return "gf3-model1";
    }
    return "?";
}

AuditFamily parse_audit_family(const std::string& text) {
    for (AuditFamily f : {AuditFamily::r1s2, AuditFamily::r2s2, AuditFamily::r2s3, AuditFamily::gf3_model1}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown audit family '" + text + "' (r1s2, r2s2, r2s3, gf3-model1)");
}

ModelConfig audit_config(AuditFamily f, std::size_t n, std::uint64_t seed) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.master_seed = seed;
    switch (f) {
        case AuditFamily::r1s2:
            cfg.r = 1;
            cfg.s = 2;
            cfg.replacement = Replacement::with;
            break;
        case AuditFamily::r2s2:
            cfg.r = 2;
            cfg.s = 2;
            break;
        case AuditFamily::r2s3:
            cfg.r = 2;
            cfg.s = 3;
            break;
        case AuditFamily::gf3_model1:
            cfg.field = FieldKind::gfp;
            cfg.p = 3;
            cfg.gft_model = 1;
            break;
    }
    cfg.validate();
    return cfg;
}

AuditReport special_case_audit(AuditFamily family, std::size_t n, std::size_t trials, std::uint64_t seed,
                               int workers) {
    if (trials == 0 || workers < 1) {
        throw std::invalid_argument("special_case_audit: trials and workers must be >= 1");
    }
    const ModelConfig cfg = audit_config(family, n, seed);
    // Per trial: corank, plus the component count for r1s2.
    std::vector<std::size_t> corank(trials);
    std::vector<std::size_t> components(trials, 0);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
    for (std::int64_t t = 0; t < count; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            if (cfg.field == FieldKind::gfp) {
                corank[i] = n - gfp_rank(sample_gft(cfg, i).matrix);
            } else {
                const Gf2Sample s = sample_gf2(cfg, i);
                corank[i] = n - gf2_rank(s.matrix);
                if (family == AuditFamily::r1s2) {
                    components[i] = functional_graph_components(s.matrix);
                }
            }
        } catch (...) {
#pragma omp critical(rmlab_audit_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    AuditReport rep;
    rep.family = family;
    rep.tag = cfg.tag();
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    const std::size_t target = family == AuditFamily::r2s3 ? 0 : 1;
    for (std::size_t i = 0; i < trials; ++i) {
        if (family == AuditFamily::r1s2) {
            rep.violations += corank[i] != components[i] ? 1 : 0;
            rep.hits += corank[i] == components[i] ? 1 : 0;
        } else {
            rep.hits += corank[i] == target ? 1 : 0;
            if (family == AuditFamily::gf3_model1) {
                rep.violations += corank[i] == 0 ? 1 : 0;
            }
        }
    }
    rep.fraction = static_cast<double>(rep.hits) / static_cast<double>(trials);
    if (family == AuditFamily::r1s2) {
        rep.threshold = 1.0;
    }
    rep.pass = rep.violations == 0 && rep.fraction >= rep.threshold;
    return rep;
}

}  // namespace rmlab
