#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rmlab/analyzer.hpp"
#include "rmlab/union_find.hpp"

namespace rmlab {

bool connected_functional_digraph(const BitMatrix& m, const BitVector& support) {
    if (support.size() != m.n_rows()) {
        throw std::invalid_argument("connected_functional_digraph: support length must equal n_rows");
    }
    if (support.is_zero() || !m.left_multiply(support).is_zero()) {
        throw std::invalid_argument("connected_functional_digraph: support is not a dependency");
    }
    const std::vector<std::size_t> rows = support.ones();
    UnionFind uf(rows.size());
    std::unordered_map<std::size_t, std::size_t> first_row_in_column;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const auto words = m.row_words(rows[idx]);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t word = words[w];
            while (word != 0) {
                const std::size_t col = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                const auto [it, inserted] = first_row_in_column.try_emplace(col, idx);
                if (!inserted) {
                    uf.unite(it->second, idx);
                }
            }
        }
    }
    return uf.components() == 1;
}

bool is_simple_sequence(std::span<const BitVector> large_basis, std::size_t n, double a) {
    const std::size_t k = large_basis.size();
    if (k == 0) {
        return true;
    }
    if (k >= 32) {
        throw std::invalid_argument("is_simple_sequence: too many vectors to enumerate");
    }
    const WeightWindow window{n, 0, a};
    BitVector acc(large_basis.front().size());
    const std::uint64_t count = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t step = 1; step <= count; ++step) {
        acc ^= large_basis[static_cast<std::size_t>(std::countr_zero(step))];
        if (!window.is_large(acc.popcount())) {
            return false;
        }
    }
    return true;
}

IntersectionStructure intersection_structure(std::span<const BitVector> large_basis, std::size_t n) {
    IntersectionStructure out;
    out.k = large_basis.size();
    if (out.k >= 32) {
        throw std::invalid_argument("intersection_structure: too many sets");
    }
    out.sizes.assign(std::size_t{1} << out.k, 0);
    for (std::size_t row = 0; row < n; ++row) {
        std::size_t pattern = 0;
        for (std::size_t i = 0; i < out.k; ++i) {
            if (large_basis[i].get(row)) {
                pattern |= std::size_t{1} << i;
            }
        }
        ++out.sizes[pattern];
    }
    if (n >= 2) {
        const double nn = static_cast<double>(n);
        const double cell = nn / std::ldexp(1.0, static_cast<int>(out.k));
        const double rel = std::pow(4.0, static_cast<double>(out.k)) * std::sqrt(std::log(nn) / nn);
        for (const std::size_t s : out.sizes) {
            if (std::abs(static_cast<double>(s) - cell) > cell * rel) {
                ++out.flags;
            }
        }
    }
    return out;
}

UMatrix build_U(unsigned k) {
    if (k < 1 || k > 12) {
        throw std::invalid_argument("build_U: k must lie in [1, 12]");
    }
    const std::size_t size = (std::size_t{1} << k) - 1;
    UMatrix u(size, std::vector<std::uint8_t>(size, 0));
    for (std::size_t x = 1; x <= size; ++x) {
        for (std::size_t y = 1; y <= size; ++y) {
            u[x - 1][y - 1] = static_cast<std::uint8_t>(std::popcount(x & y) & 1);
        }
    }
    return u;
}

UProperties check_u_properties(const UMatrix& u, unsigned k) {
    const std::size_t size = u.size();
    UProperties p{true, true, true, true};
    const long long half = 1LL << (k - 1);
    for (std::size_t i = 0; i < size; ++i) {
        long long ones = 0;
        for (std::size_t j = 0; j < size; ++j) {
            if (u[i][j] != u[j][i]) {
                p.symmetric = false;
            }
            ones += u[i][j];
        }
        if (ones != half) {
            p.row_weights = false;
        }
    }
    // 4 U^2 = 2^k (I + J) keeps k = 1 (where 2^(k-2) = 1/2) in integers.
    const long long scale = 1LL << k;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            long long dot = 0;
            for (std::size_t t = 0; t < size; ++t) {
                dot += static_cast<long long>(u[i][t]) * u[t][j];
            }
            const long long expected = scale * ((i == j ? 1 : 0) + 1);
            if (4 * dot != expected) {
                p.square_identity = false;
            }
            if (i != j) {
                long long shared = 0;
                for (std::size_t t = 0; t < size; ++t) {
                    shared += u[i][t] & u[j][t];
                }
                if (4 * shared != scale) {
                    p.pairwise_overlap = false;
                }
            }
        }
    }
    return p;
}

}  // namespace rmlab
