#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rmlab/elimination.hpp"

namespace rmlab {
namespace {

// Below this many words touched per pivot the fork/join overhead dominates.
constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

bool parallel_allowed(std::size_t work) {
    return work >= kParallelWorkThreshold && omp_get_max_threads() > 1 && !omp_in_parallel();
}

// Working copy: every row is [matrix words | transform words].
struct Workspace {
    std::size_t rows;
    std::size_t matrix_words;
    std::size_t width;
    std::vector<std::uint64_t> buf;

    std::uint64_t* row(std::size_t r) { return buf.data() + r * width; }
};

Workspace make_workspace(const BitMatrix& m, bool with_transform) {
    const std::size_t rows = m.n_rows();
    const std::size_t mw = m.words_per_row();
    const std::size_t tw = with_transform ? words_for_bits(rows) : 0;
    Workspace ws{rows, mw, mw + tw, {}};
    ws.buf.assign(rows * ws.width, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto src = m.row_words(r);
        std::uint64_t* dst = ws.row(r);
        std::copy(src.begin(), src.end(), dst);
        if (with_transform) {
            dst[mw + r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
        }
    }
    return ws;
}

// Forward elimination to row echelon form. Returns the rank; rows [rank, rows)
// end up zero in the matrix part.
std::size_t eliminate(Workspace& ws, std::size_t n_cols) {
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < n_cols && pivot < ws.rows; ++c) {
        const std::size_t w = c / kWordBits;
        const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);

        std::size_t found = ws.rows;
        for (std::size_t r = pivot; r < ws.rows; ++r) {
            if (ws.row(r)[w] & bit) {
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

        const std::uint64_t* prow = ws.row(pivot);
        const std::size_t first = found + 1;  // rows in (pivot, found) lack the bit
        const std::size_t span = ws.width - w;
        const auto last = static_cast<std::ptrdiff_t>(ws.rows);
        const bool par = parallel_allowed((ws.rows - first) * span);

#pragma omp parallel for schedule(static) if (par)
        for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(first); r < last; ++r) {
            std::uint64_t* dst = ws.row(static_cast<std::size_t>(r));
            if (dst[w] & bit) {
                for (std::size_t k = w; k < ws.width; ++k) {
                    dst[k] ^= prow[k];
                }
            }
        }
        ++pivot;
    }
    return pivot;
}

}  // namespace

Gf2Elimination gf2_rank_nullspace(const BitMatrix& m) {
    Workspace ws = make_workspace(m, true);
    Gf2Elimination out;
    out.rank = eliminate(ws, m.n_cols());
    out.basis.source_rows = m.n_rows();
    out.basis.vectors.reserve(m.n_rows() - out.rank);
    for (std::size_t r = out.rank; r < m.n_rows(); ++r) {
        const std::uint64_t* t = ws.row(r) + ws.matrix_words;
        out.basis.vectors.push_back(
            BitVector::from_words({t, words_for_bits(m.n_rows())}, m.n_rows()));
    }
    return out;
}

std::size_t gf2_rank(const BitMatrix& m) {
    Workspace ws = make_workspace(m, false);
    return eliminate(ws, m.n_cols());
}

BitVector combine_codewords(const NullSpaceBasis& basis, const std::vector<bool>& mask) {
    if (mask.size() != basis.dimension()) {
        throw std::invalid_argument("combine_codewords: mask length must equal basis dimension");
    }
    BitVector out(basis.source_rows);
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
            out ^= basis.vectors[i];
        }
    }
    return out;
}

BitVector combine_codewords(const NullSpaceBasis& basis, std::uint64_t mask) {
    if (basis.dimension() < 64 && (mask >> basis.dimension()) != 0) {
        throw std::invalid_argument("combine_codewords: mask selects vectors beyond the basis");
    }
    BitVector out(basis.source_rows);
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        if ((mask >> i) & 1u) {
            out ^= basis.vectors[i];
        }
    }
    return out;
}

}  // namespace rmlab
