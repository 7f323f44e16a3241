#include <algorithm>

#include "rmlab/analyzer.hpp"

namespace rmlab {
namespace {

NullSpaceReport classify_with(const NullSpaceBasis& basis, std::span<const Codeword> codewords, std::size_t n,
                              std::size_t omega, double a, const FundamentalSmall& fundamentals) {
    const WeightWindow window{n, omega, a};
    NullSpaceReport report;
    report.n = n;
    report.d = basis.dimension();
    report.rank = n >= report.d ? n - report.d : 0;
    report.omega = omega;
    report.window_a = a;

    report.weights.reserve(codewords.size());
    for (const Codeword& cw : codewords) {
        report.weights.push_back(cw.weight);
        if (window.is_anomalous(cw.weight)) {
            report.anomalies.push_back(cw.weight);
        }
    }

    report.sigma = fundamentals.combinations.size();
    report.lambda = report.d >= report.sigma ? report.d - report.sigma : 0;
    report.overlap_violations = fundamentals.overlap_violations;
    for (const BitVector& s : fundamentals.supports) {
        report.small_supports.push_back(s.ones());
    }

    const auto large = select_large_basis(codewords, fundamentals.combinations, window);
    report.large_basis_size = large.size();
    report.large_basis_matches_lambda = report.sigma <= report.d && large.size() == report.lambda;
    return report;
}

}  // namespace

NullSpaceReport classify(const NullSpaceBasis& basis, std::span<const Codeword> codewords, std::size_t n,
                         std::size_t omega, double a) {
    return classify_with(basis, codewords, n, omega, a, fundamental_small(basis, codewords, omega));
}

NullSpaceReport analyze(const BitMatrix& m, const AnalyzerOptions& options) {
    const std::size_t n = m.n_rows();
    const std::size_t omega = options.omega != 0 ? options.omega : default_omega(n);
    const Gf2Elimination elim = gf2_rank_nullspace(m);
    const std::vector<Codeword> codewords = enumerate_codewords(elim.basis, options.guard);

    const FundamentalSmall fundamentals = fundamental_small(elim.basis, codewords, omega);
    NullSpaceReport report = classify_with(elim.basis, codewords, n, omega, options.window_a, fundamentals);
    report.rank = elim.rank;

    // Re-verify every fundamental small support against the matrix, and
    // compare minimality with connectivity on every small codeword.
    for (const BitVector& s : fundamentals.supports) {
        if (!m.left_multiply(s).is_zero()) {
            ++report.support_verification_failures;
        }
    }
    for (const Codeword& cw : codewords) {
        if (cw.weight > omega) {
            continue;
        }
        const bool minimal = std::find(fundamentals.combinations.begin(), fundamentals.combinations.end(),
                                       cw.combination) != fundamentals.combinations.end();
        const bool connected = connected_functional_digraph(m, combine_codewords(elim.basis, cw.combination));
        ++report.small_dependencies_checked;
        if (minimal != connected) {
            ++report.connectivity_mismatches;
        }
    }

    const WeightWindow window{n, omega, options.window_a};
    const auto large_combos = select_large_basis(codewords, fundamentals.combinations, window);
    std::vector<BitVector> large;
    large.reserve(large_combos.size());
    for (const std::uint64_t c : large_combos) {
        large.push_back(combine_codewords(elim.basis, c));
    }
    report.simple_at_a1 = is_simple_sequence(large, n, 1.0);
    report.simple_at_window = is_simple_sequence(large, n, options.window_a);
    if (!large.empty()) {
        const IntersectionStructure cells = intersection_structure(large, n);
        report.intersection_sizes = cells.sizes;
        report.intersection_flags = cells.flags;
    }
    return report;
}

}  // namespace rmlab
