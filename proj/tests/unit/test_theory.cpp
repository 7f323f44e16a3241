#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rmlab/theory.hpp"
#include "rmlab/theory_table.hpp"
#include "rmlab/union_find.hpp"

using namespace rmlab;
using namespace rmlab::theory;

namespace {

// Fraction of maps f : [s] -> [s] (optionally without fixed points) whose
// underlying graph {i, f(i)} is connected.
std::pair<std::uint64_t, std::uint64_t> connected_maps(unsigned s, bool fixed_points) {
    std::vector<unsigned> f(s, 0);
    std::uint64_t total = 0;
    std::uint64_t connected = 0;
    while (true) {
        bool ok = true;
        for (unsigned i = 0; i < s && ok; ++i) {
            ok = fixed_points || f[i] != i;
        }
        if (ok) {
            ++total;
            UnionFind uf(s);
            for (unsigned i = 0; i < s; ++i) {
                uf.unite(i, f[i]);
            }
            connected += uf.components() == 1 ? 1 : 0;
        }
        unsigned k = 0;
        while (k < s && ++f[k] == s) {
            f[k++] = 0;
        }
        if (k == s) {
            break;
        }
    }
    return {connected, total};
}

// Subspaces of GF(2)^m as 2^m-bit membership masks (m <= 6 fits in 64 bits).
std::vector<std::size_t> subspace_counts(unsigned m) {
    const unsigned size = 1u << m;
    auto close = [&](std::uint64_t members, unsigned v) {
        std::uint64_t out = members;
        for (unsigned u = 0; u < size; ++u) {
            if ((members >> u) & 1) {
                out |= std::uint64_t{1} << (u ^ v);
            }
        }
        return out;
    };
    std::vector<std::size_t> counts{1};
    std::set<std::uint64_t> layer{1};  // {0}
    for (unsigned r = 1; r <= m; ++r) {
        std::set<std::uint64_t> next;
        for (std::uint64_t s : layer) {
            for (unsigned v = 1; v < size; ++v) {
                if (!((s >> v) & 1)) {
                    next.insert(close(s, v));
                }
            }
        }
        counts.push_back(next.size());
        layer = std::move(next);
    }
    return counts;
}

// Sum over 0/1 sequences of length m with r ones of q^(inversions).
std::uint64_t inversion_polynomial(unsigned m, unsigned r, std::uint64_t q) {
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        if (static_cast<unsigned>(__builtin_popcount(s)) != r) {
            continue;
        }
        unsigned inv = 0;
        unsigned ones_before = 0;
        for (unsigned i = 0; i < m; ++i) {
            if ((s >> i) & 1) {
                ++ones_before;
            } else {
                inv += ones_before;
            }
        }
        std::uint64_t term = 1;
        for (unsigned i = 0; i < inv; ++i) {
            term *= q;
        }
        total += term;
    }
    return total;
}

// Plain-product evaluation of E X_l with an exact binomial, for n <= 50.
long double direct_expected(std::size_t n, std::size_t l, Replacement model) {
    long double binom = 1;
    for (std::size_t i = 1; i <= l; ++i) {
        binom = binom * static_cast<long double>(n - l + i) / static_cast<long double>(i);
    }
    const long double nn = n;
    const long double ll = l;
    long double in;
    long double out;
    if (model == Replacement::with) {
        in = 2 * (ll / nn) * ((nn - ll) / nn);
        out = (ll / nn) * (ll / nn) + ((nn - ll) / nn) * ((nn - ll) / nn);
    } else {
        const long double pairs = (nn - 1) * (nn - 2);
        in = 2 * (ll - 1) * (nn - ll) / pairs;
        out = (ll * (ll - 1) + (nn - 1 - ll) * (nn - 2 - ll)) / pairs;
    }
    long double v = binom;
    for (std::size_t i = 0; i < l; ++i) {
        v *= in;
    }
    for (std::size_t i = 0; i < n - l; ++i) {
        v *= out;
    }
    return v;
}

}  // namespace

TEST_CASE("kappa matches brute force over random mappings") {
    CHECK(sigma_kappa(1, Replacement::with).kappa == doctest::Approx(1.0));
    CHECK(static_cast<double>(sigma_kappa(2, Replacement::with).kappa) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(static_cast<double>(sigma_kappa(3, Replacement::with).kappa) == doctest::Approx(17.0 / 27).epsilon(1e-15));
    for (unsigned s = 1; s <= 7; ++s) {
        const auto [c, t] = connected_maps(s, true);
        CHECK(t == static_cast<std::uint64_t>(std::pow(s, s)));
        CHECK(static_cast<double>(sigma_kappa(s, Replacement::with).kappa) ==
              doctest::Approx(static_cast<double>(c) / static_cast<double>(t)).epsilon(1e-14));
    }
    for (unsigned s = 2; s <= 7; ++s) {
        const auto [c, t] = connected_maps(s, false);
        CHECK(static_cast<double>(sigma_kappa(s, Replacement::without).kappa) ==
              doctest::Approx(static_cast<double>(c) / static_cast<double>(t)).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)sigma_kappa(0, Replacement::with), std::domain_error);
    CHECK_THROWS_AS((void)sigma_kappa(1, Replacement::without), std::domain_error);
}

TEST_CASE("phi constants") {
    const SeriesValue with = phi(Replacement::with);
    const SeriesValue without = phi(Replacement::without);
    CHECK(std::fabs(static_cast<double>(with.value) - 0.5215) < 5e-4);
    CHECK(std::fabs(static_cast<double>(without.value) - 0.1151) < 5e-4);
    // 30-digit reference values.
    CHECK(std::fabs(static_cast<double>(with.value) - 0.52150871862440) < 1e-12);
    CHECK(std::fabs(static_cast<double>(without.value) - 0.11513297866444) < 1e-12);
    CHECK(with.terms > 10);
}

TEST_CASE("phi truncation contract") {
    for (Real tol : {1e-6L, 1e-9L, 1e-12L}) {
        for (auto model : {Replacement::with, Replacement::without}) {
            const SeriesValue v = phi(model, tol);
            CHECK(std::fabs(static_cast<double>(phi_partial(model, v.terms + 10) - v.value)) < tol);
            CHECK(phi_partial(model, v.terms) == v.value);
        }
    }
    Real prev = 0;
    for (std::size_t k = 1; k < 60; ++k) {
        const Real v = phi_partial(Replacement::without, k);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("phi_t") {
    CHECK(phi_t(1.0L).value == doctest::Approx(static_cast<double>(phi(Replacement::without).value)).epsilon(1e-15));
    CHECK(static_cast<double>(phi_t(1e-9L).value) < 1e-17);
    CHECK(std::fabs(static_cast<double>(phi_t(0.5L).value) - 0.014087040882215) < 1e-14);
    CHECK(std::fabs(static_cast<double>(phi_t(0.5L).value - phi_t_partial(0.5L, 49))) < 1e-12);
    Real prev = 0;
    for (int i = 1; i <= 20; ++i) {
        const Real v = phi_t(i / 20.0L).value;
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS((void)phi_t(0.0L), std::domain_error);
    CHECK_THROWS_AS((void)phi_t(1.5L), std::domain_error);
}

TEST_CASE("pi") {
    CHECK(std::fabs(static_cast<double>(pi_k(0)) - 0.2888) < 5e-4);
    CHECK(std::fabs(static_cast<double>(pi_k(0)) - 0.28878809508660) < 1e-13);
    CHECK(std::fabs(static_cast<double>(pi_k(1)) - 0.57757619017320) < 1e-13);
    CHECK(std::fabs(static_cast<double>(pi_k(2)) - 0.12835026448293) < 1e-13);
    CHECK(std::fabs(static_cast<double>(pi_k(3)) - 0.0052387863054) < 1e-12);
    Real sum = 0;
    for (unsigned k = 0; k <= 10; ++k) {
        sum += pi_k(k);
    }
    CHECK(std::fabs(static_cast<double>(sum - 1)) < 1e-9);
    Real sum3 = 0;
    for (unsigned k = 0; k <= 10; ++k) {
        sum3 += pi_k(k, 3);
    }
    CHECK(std::fabs(static_cast<double>(sum3 - 1)) < 1e-9);
}

TEST_CASE("Gaussian binomials count subspaces and inversions") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    for (unsigned m = 0; m <= 6; ++m) {
        const auto counts = subspace_counts(m);
        for (unsigned r = 0; r <= m; ++r) {
            CHECK(gaussian_binomial(m, r, 2) == counts[r]);
        }
    }
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned r = 0; r <= m; ++r) {
            for (std::uint64_t q : {2u, 3u, 5u}) {
                CHECK(gaussian_binomial(m, r, q) == inversion_polynomial(m, r, q));
                CHECK(gaussian_binomial(m, r, q) == gaussian_binomial(m, m - r, q));
            }
            CHECK(static_cast<double>(gaussian_binomial_real(m, r, 2)) ==
                  doctest::Approx(static_cast<double>(gaussian_binomial(m, r, 2))).epsilon(1e-15));
        }
    }
    CHECK_THROWS_AS((void)gaussian_binomial(3, 4, 2), std::domain_error);
    CHECK_THROWS_AS((void)gaussian_binomial(70, 35, 2), std::overflow_error);
}

TEST_CASE("P* survival probabilities") {
    for (unsigned j = 0; j <= 8; ++j) {
        CHECK(static_cast<double>(p_star(j, 0, 1)) == doctest::Approx(std::ldexp(1.0, -static_cast<int>(j))));
        CHECK(static_cast<double>(p_star(j, 1, 1)) ==
              doctest::Approx(1 - std::ldexp(1.0, -static_cast<int>(j + 1))));
        for (unsigned m = 0; m <= 8; ++m) {
            CHECK(static_cast<double>(p_star(j, 0, m)) ==
                  doctest::Approx(std::ldexp(1.0, -static_cast<int>(j * m))));
        }
    }
    for (unsigned k = 0; k <= 8; ++k) {
        for (unsigned m = 0; m <= 8; ++m) {
            Real sum = 0;
            for (unsigned r = 0; r <= std::min(k, m); ++r) {
                sum += p_star(k - r, r, m);
            }
            CHECK(std::fabs(static_cast<double>(sum - 1)) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)p_star(0, 3, 2), std::domain_error);
}

TEST_CASE("joint law and corank distribution") {
    const Real fw = phi(Replacement::without).value;
    const Real fr = phi(Replacement::with).value;
    CHECK(static_cast<double>(p_joint(0, 0, fw)) == doctest::Approx(static_cast<double>(std::exp(-fw) * pi_k(0))));
    CHECK(std::fabs(static_cast<double>(p_joint(0, 0, fw)) - 0.2574) < 5e-4);
    CHECK(std::fabs(static_cast<double>(p_joint(0, 0, fw)) - 0.25738170217275) < 1e-12);
    CHECK(std::fabs(static_cast<double>(p_joint(0, 0, fr)) - 0.17143161925416) < 1e-12);
    for (Real f : {fw, fr}) {
        const auto dist = corank_distribution(12, f);
        CHECK(std::fabs(static_cast<double>(std::accumulate(dist.begin(), dist.end(), Real{0}) - 1)) < 1e-9);
        for (Real v : dist) {
            CHECK(v >= 0);
            CHECK(v <= 1);
        }
        Real joint = 0;
        for (unsigned s = 0; s <= 12; ++s) {
            for (unsigned l = 0; l <= 12; ++l) {
                joint += p_joint(s, l, f);
            }
        }
        CHECK(std::fabs(static_cast<double>(joint - 1)) < 1e-9);
        CHECK(dist[0] == p_joint(0, 0, f));
    }
}

TEST_CASE("q-system identity") {
    CHECK(static_cast<double>(verify_q_system(0)) < 1e-9);
    CHECK(static_cast<double>(verify_q_system(1)) < 1e-6);
    CHECK(static_cast<double>(verify_q_system(5)) < 1e-6);
    CHECK(static_cast<double>(verify_q_system(8)) < 1e-6);
    CHECK_THROWS_AS((void)verify_q_system(9), std::domain_error);
}

TEST_CASE("expected dependency counts agree with direct evaluation for n <= 50") {
    for (std::size_t n : {5, 12, 20, 33, 50}) {
        for (std::size_t l = 1; l <= n; ++l) {
            for (auto model : {Replacement::with, Replacement::without}) {
                const long double direct = direct_expected(n, l, model);
                const long double fast = expected_num_deps(n, l, model);
                if (direct == 0) {
                    CHECK(fast == 0);
                } else {
                    CHECK(std::fabs(static_cast<double>(fast / direct - 1)) < 1e-10);
                }
            }
        }
    }
    CHECK(expected_num_deps(20, 20, Replacement::with) == 0);
    CHECK(expected_num_deps(20, 1, Replacement::without) == 0);
    CHECK(std::fabs(static_cast<double>(expected_num_deps(20, 1, Replacement::with)) - 0.285152120722608) < 1e-13);
    CHECK(std::fabs(static_cast<double>(expected_num_deps(20, 3, Replacement::with)) - 0.126818329840277) < 1e-13);
    CHECK_THROWS_AS((void)expected_num_deps(10, 0, Replacement::with), std::domain_error);
    CHECK_THROWS_AS((void)expected_num_deps(10, 11, Replacement::with), std::domain_error);
}

TEST_CASE("first moments at n = 10^6") {
    const std::size_t n = 1000000;
    const LRange j1 = window_range(n, 1);
    CHECK(j1.lo == 496284);
    CHECK(j1.hi == 503716);
    for (auto model : {Replacement::with, Replacement::without}) {
        CHECK(std::fabs(static_cast<double>(expected_deps_in_window(n, 1, model)) - 1) < 0.01);
    }
    for (std::size_t l = 1; l <= 10; ++l) {
        const Real ratio = expected_num_deps(n, l, Replacement::with) / small_dependency_limit(l);
        CHECK(std::fabs(static_cast<double>(ratio) - 1) < 0.01);
    }
}

TEST_CASE("GF(t) expected counts") {
    const GftParameters ok{0.5, 0.25, 0.5};
    const Real v = expected_num_deps_gft(200, 100, ok);
    CHECK(std::isfinite(static_cast<double>(v)));
    CHECK(v > 0);
    CHECK_THROWS_AS((void)expected_num_deps_gft(200, 100, GftParameters{0.25, 0.75, 0.5}), std::domain_error);
    CHECK_THROWS_AS((void)expected_num_deps_gft(200, 100, GftParameters{0.75, 0.25, 0.5}), std::domain_error);
}

TEST_CASE("theory tables") {
    const TheoryTable t = build_theory_table(Replacement::without);
    CHECK(t.tag == "gf2-without-r1-s3");
    CHECK(t.d_max() == 12);
    CHECK(t.phi_terms > 0);
    CHECK(std::fabs(static_cast<double>(std::accumulate(t.pi.begin(), t.pi.end(), Real{0}) - 1)) < 1e-9);
    CHECK(std::fabs(static_cast<double>(std::accumulate(t.corank.begin(), t.corank.end(), Real{0}) - 1)) < 1e-9);
    CHECK(t.p_star.size() > 0);
    const nlohmann::json j = t;
    CHECK(j.at("corank").size() == 13);
    CHECK(j.at("joint").size() == 13);
    CHECK(corank_csv(t).rfind("d,probability\n0,0.2573", 0) == 0);
    CHECK(joint_csv(t).rfind("sigma,lambda,probability\n0,0,", 0) == 0);

    ModelConfig cfg;
    cfg.r = 2;
    CHECK_THROWS_AS((void)theory_for(cfg), std::invalid_argument);

    ModelConfig g3;
    g3.field = FieldKind::gfp;
    g3.p = 3;
    const TheoryTable m1 = theory_for(g3);
    CHECK(m1.corank[1] == 1);

    ModelConfig g5 = g3;
    g5.p = 5;
    g5.gft_model = 2;
    g5.f = uniform_nonzero(5);
    const TheoryTable m2 = theory_for(g5);
    CHECK(static_cast<double>(m2.phi) == doctest::Approx(static_cast<double>(phi_t(0.25L).value)));
    CHECK(static_cast<double>(m2.corank[0]) == doctest::Approx(std::exp(-static_cast<double>(m2.phi))));

    // Model 2 over GF(7) with all mass on 6 = -1: gamma = 1 > 1/2, outside the theorem.
    ModelConfig bad = g3;
    bad.p = 7;
    bad.gft_model = 2;
    bad.f = {0, 0, 0, 0, 0, 0, 1};
    CHECK_THROWS_AS((void)theory_for(bad), std::domain_error);
}
