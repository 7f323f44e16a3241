#include <algorithm>
#include <array>
#include <stdexcept>

#include "rmlab/model.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {
namespace {

// Stream index for entry values; positions use the trial seed directly.
constexpr std::uint64_t kValueStream = 0x76616c756573ULL;

// Draws `count` distinct rows from [n] - {owner}, in draw order.
void draw_distinct(Rng& rng, std::size_t n, std::size_t owner, std::size_t count,
                   std::vector<std::size_t>& out) {
    out.clear();
    std::vector<std::size_t> excluded{owner};
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t candidate = rng.below(n - 1 - k);
        for (const std::size_t e : excluded) {  // ascending
            if (candidate >= e) {
                ++candidate;
            }
        }
        out.push_back(candidate);
        excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), candidate), candidate);
    }
}

void draw_with_replacement(Rng& rng, std::size_t n, std::size_t count, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(rng.below(n));
    }
}

Residue draw_residue(Rng& rng, const std::vector<double>& f) {
    const double u = rng.unit();
    double acc = 0.0;
    Residue last = 0;
    for (Residue v = 1; v < f.size(); ++v) {
        if (f[v] <= 0.0) {
            continue;
        }
        acc += f[v];
        last = v;
        if (u < acc) {
            return v;
        }
    }
    return last;  // rounding slack at the top of the CDF
}

}  // namespace

Gf2Sample sample_gf2(const ModelConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    if (cfg.field != FieldKind::gf2) {
        throw std::invalid_argument("sample_gf2: configuration is not over GF(2)");
    }
    const std::uint64_t seed = derive_seed(cfg.master_seed, trial);
    Rng rng(seed);
    BitMatrix m(cfg.n, cfg.n_cols());
    std::vector<std::size_t> rows;
    rows.reserve(cfg.s);
    for (std::size_t block = 0; block < cfg.r; ++block) {
        for (std::size_t i = 0; i < cfg.n; ++i) {
            const std::size_t col = block * cfg.n + i;
            if (cfg.replacement == Replacement::with) {
                draw_with_replacement(rng, cfg.n, cfg.s - 1, rows);
            } else {
                draw_distinct(rng, cfg.n, i, cfg.s - 1, rows);
            }
            m.flip(i, col);
            for (const std::size_t row : rows) {
                m.flip(row, col);
            }
        }
    }
    return {std::move(m), {cfg, trial, seed}};
}

GftSample sample_gft(const ModelConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    if (cfg.field != FieldKind::gfp) {
        throw std::invalid_argument("sample_gft: configuration is not over GF(t)");
    }
    const std::uint64_t seed = derive_seed(cfg.master_seed, trial);
    Rng positions(seed);
    Rng values(mix64(seed ^ kValueStream));
    PrimeFieldMatrix m(cfg.p, cfg.n, cfg.n_cols());
    std::vector<std::size_t> rows;
    for (std::size_t block = 0; block < cfg.r; ++block) {
        for (std::size_t i = 0; i < cfg.n; ++i) {
            const std::size_t col = block * cfg.n + i;
            draw_distinct(positions, cfg.n, i, cfg.s - 1, rows);
            std::array<Residue, 3> v{1, 1, 1};
            if (cfg.gft_model == 2) {
                v[1] = draw_residue(values, cfg.f);
                v[2] = draw_residue(values, cfg.f);
            } else if (cfg.gft_model == 3) {
                for (Residue& x : v) {
                    x = draw_residue(values, cfg.f);
                }
            }
            m.accumulate(i, col, v[0]);
            m.accumulate(rows[0], col, v[1]);
            m.accumulate(rows[1], col, v[2]);
        }
    }
    return {std::move(m), {cfg, trial, seed}};
}

}  // namespace rmlab
