#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rmlab/analyzer.hpp"
#include "rmlab/elimination.hpp"
#include "rmlab/model.hpp"
#include "rmlab/report_json.hpp"

using namespace rmlab;

namespace {

BitVector rows_vector(std::size_t n, std::initializer_list<std::size_t> rows) {
    BitVector v(n);
    for (std::size_t r : rows) {
        v.set(r);
    }
    return v;
}

BitVector first_k(std::size_t n, std::size_t k, std::size_t offset = 0) {
    BitVector v(n);
    for (std::size_t i = 0; i < k; ++i) {
        v.set(offset + i);
    }
    return v;
}

// Column c of the result holds the listed rows.
BitMatrix from_columns(std::size_t n, const std::vector<std::vector<std::size_t>>& cols) {
    BitMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r : cols[c]) {
            m.flip(r, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("default omega and window") {
    CHECK(default_omega(500) == 39);
    CHECK(default_omega(2000) == 58);
    const WeightWindow w{500, 39, 4.0};
    CHECK(w.half_width() == doctest::Approx(std::sqrt(4 * 500 * std::log(500.0))));
    CHECK(w.is_small(39));
    CHECK_FALSE(w.is_small(40));
    CHECK(w.is_large(250 - 111));
    CHECK_FALSE(w.is_large(250 - 112));
    CHECK(w.is_anomalous(125));
}

TEST_CASE("enumeration") {
    NullSpaceBasis empty{10, {}};
    CHECK(enumerate_codewords(empty).empty());

    NullSpaceBasis one{10, {rows_vector(10, {1, 4, 7})}};
    const auto cw1 = enumerate_codewords(one);
    REQUIRE(cw1.size() == 1);
    CHECK(cw1[0].combination == 1);
    CHECK(cw1[0].weight == 3);

    std::mt19937_64 gen(3);
    for (int t = 0; t < 20; ++t) {
        NullSpaceBasis basis{70, {}};
        for (int i = 0; i < 3; ++i) {
            BitVector v(70);
            for (std::size_t r = 0; r < 70; ++r) {
                if (gen() & 1) {
                    v.set(r);
                }
            }
            basis.vectors.push_back(v);
        }
        const auto cws = enumerate_codewords(basis);
        REQUIRE(cws.size() == 7);
        std::vector<bool> seen(8, false);
        for (const Codeword& c : cws) {
            REQUIRE(c.combination >= 1);
            REQUIRE(c.combination <= 7);
            CHECK_FALSE(seen[c.combination]);
            seen[c.combination] = true;
            BitVector direct(70);
            for (int i = 0; i < 3; ++i) {
                if ((c.combination >> i) & 1) {
                    direct ^= basis.vectors[static_cast<std::size_t>(i)];
                }
            }
            CHECK(c.weight == direct.popcount());
        }
    }
}

TEST_CASE("enumeration guard refuses instead of truncating") {
    NullSpaceBasis big{30, {}};
    for (std::size_t i = 0; i < 21; ++i) {
        big.vectors.push_back(rows_vector(30, {i}));
    }
    CHECK_THROWS_AS((void)enumerate_codewords(big), EnumerationGuardExceeded);
    CHECK(enumerate_codewords(big, 21).size() == (std::size_t{1} << 21) - 1);
}

TEST_CASE("classification bands") {
    const std::size_t n = 500;
    // A weight 2 and B weight n/2, disjoint: A + B has weight 252, still large.
    NullSpaceBasis basis{n, {first_k(n, 2), first_k(n, 250, 2)}};
    const auto cws = enumerate_codewords(basis);
    const NullSpaceReport rep = classify(basis, cws, n, 39, 4.0);
    CHECK(rep.anomalies.empty());
    CHECK(rep.sigma == 1);
    CHECK(rep.lambda == 1);
    CHECK(rep.sigma + rep.lambda == rep.d);

    NullSpaceBasis quarter{n, {first_k(n, 125)}};
    const NullSpaceReport bad = classify(quarter, enumerate_codewords(quarter), n, 39, 4.0);
    CHECK(bad.anomalies == std::vector<std::size_t>{125});
}

TEST_CASE("fundamental small codewords") {
    const std::size_t n = 100;
    NullSpaceBasis single{n, {rows_vector(n, {3, 5, 8})}};
    const auto f1 = fundamental_small(single, enumerate_codewords(single), 39);
    REQUIRE(f1.supports.size() == 1);
    CHECK(f1.supports[0].popcount() == 3);

    // Basis {A, A + B}: fundamentals are A and B, never A + B.
    const BitVector a = rows_vector(n, {0, 1});
    const BitVector b = rows_vector(n, {10, 11, 12});
    NullSpaceBasis pair{n, {a, a ^ b}};
    const auto f2 = fundamental_small(pair, enumerate_codewords(pair), 39);
    REQUIRE(f2.supports.size() == 2);
    CHECK(((f2.supports[0] == a && f2.supports[1] == b) || (f2.supports[0] == b && f2.supports[1] == a)));
    CHECK(f2.overlap_violations == 0);

    // Overlapping minimal supports are reported, not fatal.
    NullSpaceBasis overlap{n, {rows_vector(n, {0, 1, 2}), rows_vector(n, {2, 3, 4})}};
    const auto f3 = fundamental_small(overlap, enumerate_codewords(overlap), 39);
    CHECK(f3.supports.size() == 3);
    CHECK(f3.overlap_violations == 3);
}

TEST_CASE("connected functional digraph") {
    // Rows 0, 1 point at each other; rows 2..4 form their own triangle.
    const BitMatrix m = from_columns(5, {{0, 1, 2}, {1, 0, 3}, {2, 3, 4}, {3, 4, 2}, {4, 2, 3}});
    CHECK(connected_functional_digraph(m, rows_vector(5, {0, 1})));
    CHECK_THROWS_AS((void)connected_functional_digraph(m, rows_vector(5, {0, 2})), std::invalid_argument);

    // Two disjoint 2-cycles: their union is a dependency but not connected.
    const BitMatrix two = from_columns(
        8, {{0, 1, 4}, {1, 0, 5}, {2, 3, 6}, {3, 2, 7}, {4, 5, 6}, {5, 6, 7}, {6, 7, 4}, {7, 4, 5}});
    CHECK(two.left_multiply(rows_vector(8, {0, 1, 2, 3})).is_zero());
    CHECK_FALSE(connected_functional_digraph(two, rows_vector(8, {0, 1, 2, 3})));
    CHECK(connected_functional_digraph(two, rows_vector(8, {2, 3})));
}

TEST_CASE("simple sequences") {
    const std::size_t n = 2000;
    const BitVector b = first_k(n, 1000);
    CHECK(is_simple_sequence(std::vector<BitVector>{b}, n));
    CHECK_FALSE(is_simple_sequence(std::vector<BitVector>{b, b}, n));
    // Halves overlapping in n/4 rows: every XOR has weight n/2.
    CHECK(is_simple_sequence(std::vector<BitVector>{b, first_k(n, 1000, 500)}, n));
}

TEST_CASE("intersection structure") {
    const std::size_t n = 1000;
    const auto one = intersection_structure(std::vector<BitVector>{first_k(n, 500)}, n);
    CHECK(one.sizes == std::vector<std::size_t>{500, 500});
    CHECK(one.flags == 0);

    const auto two = intersection_structure(std::vector<BitVector>{first_k(n, 500), first_k(n, 500, 250)}, n);
    CHECK(std::accumulate(two.sizes.begin(), two.sizes.end(), std::size_t{0}) == n);
    CHECK(two.sizes == std::vector<std::size_t>{250, 250, 250, 250});

    // n/2 (1 +- 4 sqrt(ln n / n)) is roughly [334, 666]; 100 / 900 misses on both sides.
    const auto skew = intersection_structure(std::vector<BitVector>{first_k(n, 100)}, n);
    CHECK(skew.flags == 2);
}

TEST_CASE("U matrix") {
    CHECK(build_U(1) == UMatrix{{1}});
    const UMatrix u2 = build_U(2);
    REQUIRE(u2.size() == 3);
    for (const auto& row : u2) {
        CHECK(std::accumulate(row.begin(), row.end(), 0) == 2);
    }
    // k = 3: U^2 = 2 (I + J) entrywise.
    const UMatrix u3 = build_U(3);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            int s = 0;
            for (std::size_t t = 0; t < 7; ++t) {
                s += u3[i][t] * u3[t][j];
            }
            CHECK(s == 2 * ((i == j ? 1 : 0) + 1));
        }
    }
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(check_u_properties(build_U(k), k).all());
    }
    CHECK_THROWS_AS((void)build_U(0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_U(13), std::invalid_argument);
}

TEST_CASE("analyze: sampled instances satisfy every report invariant") {
    for (auto rep : {Replacement::with, Replacement::without}) {
        ModelConfig cfg;
        cfg.n = 200;
        cfg.replacement = rep;
        cfg.master_seed = 5;
        std::size_t small_seen = 0;
        for (std::uint64_t t = 0; t < 300; ++t) {
            const BitMatrix m = sample_gf2(cfg, t).matrix;
            const NullSpaceReport r = analyze(m);
            REQUIRE(r.sigma + r.lambda == r.d);
            REQUIRE(r.rank + r.d == 200);
            REQUIRE(r.weights.size() == (std::size_t{1} << r.d) - 1);
            CHECK(r.connectivity_mismatches == 0);
            CHECK(r.support_verification_failures == 0);
            CHECK(r.large_basis_matches_lambda);
            CHECK(r.small_supports.size() == r.sigma);
            for (const auto& rows : r.small_supports) {
                BitVector x(200);
                for (std::size_t row : rows) {
                    x.set(row);
                }
                CHECK(m.left_multiply(x).is_zero());
                CHECK(connected_functional_digraph(m, x));
            }
            const std::size_t sum = std::accumulate(r.intersection_sizes.begin(), r.intersection_sizes.end(),
                                                    std::size_t{0});
            CHECK((r.intersection_sizes.empty() || sum == 200));
            small_seen += r.small_dependencies_checked;
        }
        CHECK(small_seen > 0);
    }
}

TEST_CASE("analyze on a duplicated row") {
    BitMatrix m = BitMatrix::identity(6);
    m.set(5, 5, false);
    m.set(5, 2);
    const NullSpaceReport r = analyze(m);
    CHECK(r.d == 1);
    CHECK(r.sigma == 1);
    CHECK(r.lambda == 0);
    CHECK(r.weights == std::vector<std::size_t>{2});
    CHECK(r.small_supports == std::vector<std::vector<std::size_t>>{{2, 5}});
}

TEST_CASE("reports round-trip through JSON") {
    ModelConfig cfg;
    cfg.n = 300;
    for (std::uint64_t t = 0; t < 10; ++t) {
        const NullSpaceReport r = analyze(sample_gf2(cfg, t).matrix);
        const nlohmann::json j = r;
        CHECK(j.at("weights").is_array());
        CHECK(j.get<NullSpaceReport>() == r);
        CHECK(nlohmann::json::parse(j.dump()).get<NullSpaceReport>() == r);
    }
}
