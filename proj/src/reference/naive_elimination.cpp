#include "rmlab/reference/naive_elimination.hpp"

#include <utility>

namespace rmlab::reference {

DenseGf2 to_dense(const BitMatrix& m) {
    DenseGf2 a(m.n_rows(), std::vector<std::uint8_t>(m.n_cols(), 0));
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            a[r][c] = m.get(r, c) ? 1 : 0;
        }
    }
    return a;
}

DenseGfp to_dense(const PrimeFieldMatrix& m) {
    DenseGfp a(m.n_rows(), std::vector<std::uint64_t>(m.n_cols(), 0));
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            a[r][c] = m.get(r, c);
        }
    }
    return a;
}

std::size_t naive_gf2_rank(DenseGf2 a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && a[r][c] != 0) {
                for (std::size_t k = 0; k < cols; ++k) {
                    a[r][k] = static_cast<std::uint8_t>(a[r][k] ^ a[rank][k]);
                }
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t naive_gfp_rank(DenseGfp a, std::uint64_t p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] % p == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(a[piv], a[rank]);
        // Fermat inverse, independent of the extended-Euclid path in the kernel.
        const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] % p == 0) {
                continue;
            }
            const std::uint64_t f = a[r][c] % p * inv % p;
            for (std::size_t k = 0; k < cols; ++k) {
                a[r][k] = (a[r][k] % p + (p - f) * (a[rank][k] % p)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint8_t>> naive_gf2_left_kernel(const DenseGf2& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    // Equations: one per column of a, unknowns: one per row of a.
    DenseGf2 t(cols, std::vector<std::uint8_t>(rows, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            t[c][r] = a[r][c];
        }
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t v = 0; v < rows && rank < cols; ++v) {
        std::size_t p = rank;
        while (p < cols && t[p][v] == 0) {
            ++p;
        }
        if (p == cols) {
            continue;
        }
        std::swap(t[p], t[rank]);
        for (std::size_t e = 0; e < cols; ++e) {
            if (e != rank && t[e][v]) {
                for (std::size_t k = 0; k < rows; ++k) {
                    t[e][k] ^= t[rank][k];
                }
            }
        }
        pivot_col.push_back(v);
        ++rank;
    }
    std::vector<bool> is_pivot(rows, false);
    for (const std::size_t v : pivot_col) {
        is_pivot[v] = true;
    }
    std::vector<std::vector<std::uint8_t>> kernel;
    for (std::size_t free = 0; free < rows; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<std::uint8_t> x(rows, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            x[pivot_col[i]] = t[i][free];
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

}  // namespace rmlab::reference
