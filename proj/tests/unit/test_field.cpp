#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rmlab/bit_matrix.hpp"
#include "rmlab/elimination.hpp"
#include "rmlab/model.hpp"
#include "rmlab/prime_field_matrix.hpp"
#include "rmlab/reference/naive_elimination.hpp"

using namespace rmlab;

namespace {

BitMatrix random_bits(std::mt19937_64& gen, std::size_t rows, std::size_t cols, double density = 0.5) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (bit(gen)) {
                m.set(i, j);
            }
        }
    }
    return m;
}

PrimeFieldMatrix random_residues(std::mt19937_64& gen, Residue p, std::size_t rows, std::size_t cols) {
    PrimeFieldMatrix m(p, rows, cols);
    std::uniform_int_distribution<Residue> val(0, p - 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, val(gen));
        }
    }
    return m;
}

// Low-rank instances exercise the null space; dense ones the full-rank path.
BitMatrix low_rank(std::mt19937_64& gen, std::size_t rows, std::size_t cols, std::size_t k) {
    const BitMatrix a = random_bits(gen, rows, k);
    const BitMatrix b = random_bits(gen, k, cols);
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            if (a.get(i, t)) {
                for (std::size_t j = 0; j < cols; ++j) {
                    if (b.get(t, j)) {
                        m.flip(i, j);
                    }
                }
            }
        }
    }
    return m;
}

void check_basis(const BitMatrix& m, const Gf2Elimination& e) {
    REQUIRE(e.rank + e.basis.dimension() == m.n_rows());
    for (const BitVector& x : e.basis.vectors) {
        CHECK_FALSE(x.is_zero());
        CHECK(m.left_multiply(x).is_zero());
    }
    // Independence: the basis itself has full rank.
    if (e.basis.dimension() > 0) {
        BitMatrix b(e.basis.dimension(), m.n_rows());
        for (std::size_t i = 0; i < e.basis.dimension(); ++i) {
            for (std::size_t r : e.basis.vectors[i].ones()) {
                b.set(i, r);
            }
        }
        CHECK(gf2_rank(b) == e.basis.dimension());
    }
}

}  // namespace

TEST_CASE("bit vector bookkeeping") {
    BitVector v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.popcount() == 3);
    CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
    BitVector w(130);
    w.set(64);
    CHECK(w.subset_of(v));
    CHECK_FALSE(v.subset_of(w));
    CHECK(w.intersects(v));
    CHECK((v ^ w).popcount() == 2);
    v.flip(0);
    CHECK_FALSE(v.get(0));
}

TEST_CASE("bit matrix rejects empty shapes and keeps padding clear") {
    CHECK_THROWS_AS(BitMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix(3, 0), std::invalid_argument);
    BitMatrix m(2, 70);
    m.set(1, 69);
    CHECK(m.row_words(1)[1] == (std::uint64_t{1} << 5));
    CHECK(m.column_weight(69) == 1);
}

TEST_CASE("identity has full rank and empty basis") {
    for (std::size_t n : {1, 5, 64, 65, 200}) {
        const auto e = gf2_rank_nullspace(BitMatrix::identity(n));
        CHECK(e.rank == n);
        CHECK(e.basis.dimension() == 0);
    }
}

TEST_CASE("duplicate last row gives basis {e_1 + e_n}") {
    const std::size_t n = 9;
    BitMatrix m = BitMatrix::identity(n);
    m.set(n - 1, n - 1, false);
    m.set(n - 1, 0);
    const auto e = gf2_rank_nullspace(m);
    CHECK(e.rank == n - 1);
    REQUIRE(e.basis.dimension() == 1);
    CHECK(e.basis.vectors[0].ones() == std::vector<std::size_t>{0, n - 1});
}

TEST_CASE("packed elimination matches the naive reference on 500 random 64x64 matrices") {
    std::mt19937_64 gen(64);
    for (int t = 0; t < 500; ++t) {
        const BitMatrix m = (t % 3 == 0) ? low_rank(gen, 64, 64, 20 + t % 40) : random_bits(gen, 64, 64);
        const auto e = gf2_rank_nullspace(m);
        REQUIRE(e.rank == reference::naive_gf2_rank(reference::to_dense(m)));
        REQUIRE(gf2_rank(m) == e.rank);
        check_basis(m, e);
    }
}

TEST_CASE("packed elimination matches the naive reference up to 128x128, including left kernels") {
    std::mt19937_64 gen(128);
    std::uniform_int_distribution<std::size_t> dim(1, 128);
    for (int t = 0; t < 500; ++t) {
        const std::size_t rows = dim(gen);
        const std::size_t cols = dim(gen);
        const double density = (t % 4 == 0) ? 0.03 : 0.5;
        const BitMatrix m = (t % 5 == 0) ? low_rank(gen, rows, cols, 1 + rows / 3) : random_bits(gen, rows, cols, density);
        const auto e = gf2_rank_nullspace(m);
        const auto dense = reference::to_dense(m);
        REQUIRE(e.rank == reference::naive_gf2_rank(dense));
        REQUIRE(reference::naive_gf2_left_kernel(dense).size() == e.basis.dimension());
        check_basis(m, e);
    }
}

TEST_CASE("every basis vector of a sampled n <= 512 matrix is a dependency") {
    for (std::size_t n : {50, 200, 512}) {
        for (auto rep : {Replacement::with, Replacement::without}) {
            ModelConfig cfg;
            cfg.n = n;
            cfg.replacement = rep;
            cfg.master_seed = 99;
            for (std::uint64_t trial = 0; trial < 20; ++trial) {
                const BitMatrix m = sample_gf2(cfg, trial).matrix;
                check_basis(m, gf2_rank_nullspace(m));
            }
        }
    }
}

TEST_CASE("rank is invariant under row and column permutations") {
    std::mt19937_64 gen(7);
    for (int t = 0; t < 50; ++t) {
        const BitMatrix m = low_rank(gen, 90, 110, 1 + t);
        std::vector<std::size_t> rp(90);
        std::vector<std::size_t> cp(110);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), gen);
        std::shuffle(cp.begin(), cp.end(), gen);
        CHECK(gf2_rank(m.permuted(rp, cp)) == gf2_rank(m));
    }
}

TEST_CASE("large matrices take the parallel path and still agree with the reference") {
    std::mt19937_64 gen(11);
    const BitMatrix m = low_rank(gen, 600, 600, 550);
    const auto e = gf2_rank_nullspace(m);
    CHECK(e.rank == reference::naive_gf2_rank(reference::to_dense(m)));
    check_basis(m, e);
}

TEST_CASE("combine_codewords") {
    BitVector a(4);
    a.set(0);
    BitVector b(4);
    b.set(0);
    b.set(1);
    NullSpaceBasis basis{4, {a, b}};
    CHECK(combine_codewords(basis, std::vector<bool>{false, false}).is_zero());
    CHECK(combine_codewords(basis, std::vector<bool>{true, false}) == a);
    CHECK(combine_codewords(basis, std::vector<bool>{false, true}) == b);
    CHECK(combine_codewords(basis, std::vector<bool>{true, true}).ones() == std::vector<std::size_t>{1});
    CHECK(combine_codewords(basis, std::uint64_t{3}).ones() == std::vector<std::size_t>{1});
    CHECK_THROWS_AS((void)combine_codewords(basis, std::vector<bool>{true}), std::invalid_argument);
}

TEST_CASE("prime field matrices") {
    CHECK(is_prime(2));
    CHECK(is_prime(2147483629));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PrimeFieldMatrix(9, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFieldMatrix(3, 0, 2), std::invalid_argument);
    for (Residue p : {3u, 5u, 7u, 101u}) {
        for (Residue a = 1; a < p; ++a) {
            CHECK((static_cast<std::uint64_t>(a) * inverse_mod(a, p)) % p == 1);
        }
    }
    PrimeFieldMatrix m(5, 1, 1);
    m.set(0, 0, 7);
    CHECK(m.get(0, 0) == 2);
    m.accumulate(0, 0, 4);
    CHECK(m.get(0, 0) == 1);
}

TEST_CASE("identity over GF(3) has full rank") {
    const auto e = gfp_rank_nullspace(PrimeFieldMatrix::identity(3, 17));
    CHECK(e.rank == 17);
    CHECK(e.basis.empty());
}

TEST_CASE("GF(p) elimination matches the reference and its basis annihilates") {
    std::mt19937_64 gen(5);
    for (Residue p : {2u, 3u, 5u, 7u, 65521u}) {
        for (int t = 0; t < 40; ++t) {
            PrimeFieldMatrix m = random_residues(gen, p, 32, 32);
            if (t % 2 == 0) {
                // Force dependencies: overwrite a few rows with combinations.
                for (std::size_t r = 0; r < 1 + static_cast<std::size_t>(t % 6); ++r) {
                    const std::size_t dst = 31 - r;
                    for (std::size_t j = 0; j < 32; ++j) {
                        m.set(dst, j, static_cast<std::uint64_t>(m.get(0, j)) * (r + 2) + m.get(1 + r, j));
                    }
                }
            }
            const auto e = gfp_rank_nullspace(m);
            REQUIRE(e.rank == reference::naive_gfp_rank(reference::to_dense(m), p));
            REQUIRE(gfp_rank(m) == e.rank);
            REQUIRE(e.rank + e.basis.size() == 32);
            for (const auto& x : e.basis) {
                const auto prod = m.left_multiply(x);
                CHECK(std::all_of(prod.begin(), prod.end(), [](Residue v) { return v == 0; }));
            }
        }
    }
}

TEST_CASE("GF(3) model 1: the all-ones vector annihilates, so corank >= 1") {
    ModelConfig cfg;
    cfg.n = 60;
    cfg.field = FieldKind::gfp;
    cfg.p = 3;
    cfg.gft_model = 1;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const PrimeFieldMatrix m = sample_gft(cfg, t).matrix;
        const std::vector<Residue> ones(60, 1);
        const auto prod = m.left_multiply(ones);
        CHECK(std::all_of(prod.begin(), prod.end(), [](Residue v) { return v == 0; }));
        CHECK(gfp_rank(m) <= 59);
    }
}
