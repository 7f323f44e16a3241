#include <algorithm>
#include <stdexcept>

#include "rmlab/elimination.hpp"

namespace rmlab {
namespace {

struct GfpWorkspace {
    std::size_t rows;
    std::size_t cols;
    std::size_t width;  // cols, plus rows when the transform is carried
    std::vector<Residue> buf;

    Residue* row(std::size_t r) { return buf.data() + r * width; }
};

GfpWorkspace make_workspace(const PrimeFieldMatrix& m, bool with_transform) {
    GfpWorkspace ws{m.n_rows(), m.n_cols(), m.n_cols() + (with_transform ? m.n_rows() : 0), {}};
    ws.buf.assign(ws.rows * ws.width, 0);
    for (std::size_t r = 0; r < ws.rows; ++r) {
        const auto src = m.row(r);
        std::copy(src.begin(), src.end(), ws.row(r));
        if (with_transform) {
            ws.row(r)[ws.cols + r] = 1;
        }
    }
    return ws;
}

// Pivot rows are scaled to a leading 1; the update then only walks the
// pivot row's nonzero positions, which keeps sparse instances cheap.
std::size_t eliminate(GfpWorkspace& ws, Residue p) {
    std::vector<std::size_t> support;
    support.reserve(ws.width);
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < ws.cols && pivot < ws.rows; ++c) {
        std::size_t found = ws.rows;
        for (std::size_t r = pivot; r < ws.rows; ++r) {
            if (ws.row(r)[c] != 0) {
                found = r;
                break;
            }
        }
        if (found == ws.rows) {
            continue;
        }
        if (found != pivot) {
            std::swap_ranges(ws.row(found), ws.row(found) + ws.width, ws.row(pivot));
        }
        Residue* prow = ws.row(pivot);
        const std::uint64_t inv = inverse_mod(prow[c], p);
        support.clear();
        for (std::size_t k = c; k < ws.width; ++k) {
            if (prow[k] != 0) {
                prow[k] = static_cast<Residue>(prow[k] * inv % p);
                support.push_back(k);
            }
        }
        for (std::size_t r = found + 1; r < ws.rows; ++r) {
            Residue* dst = ws.row(r);
            const std::uint64_t factor = dst[c];
            if (factor == 0) {
                continue;
            }
            const std::uint64_t neg = p - factor;
            for (const std::size_t k : support) {
                dst[k] = static_cast<Residue>((dst[k] + neg * prow[k]) % p);
            }
        }
        ++pivot;
    }
    return pivot;
}

}  // namespace

GfpElimination gfp_rank_nullspace(const PrimeFieldMatrix& m) {
    GfpWorkspace ws = make_workspace(m, true);
    GfpElimination out;
    out.rank = eliminate(ws, m.modulus());
    for (std::size_t r = out.rank; r < ws.rows; ++r) {
        const Residue* t = ws.row(r) + ws.cols;
        out.basis.emplace_back(t, t + ws.rows);
    }
    return out;
}

std::size_t gfp_rank(const PrimeFieldMatrix& m) {
    GfpWorkspace ws = make_workspace(m, false);
    return eliminate(ws, m.modulus());
}

}  // namespace rmlab
