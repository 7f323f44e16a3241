#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rmlab/bit_matrix.hpp"
#include "rmlab/bit_vector.hpp"
#include "rmlab/elimination.hpp"

namespace rmlab {

/// A nonzero element of the null space, named by the subset of basis vectors
/// it combines (bit i selects basis vector i).
struct Codeword {
    std::uint64_t combination = 0;
    std::size_t weight = 0;

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

inline constexpr std::size_t kDefaultEnumerationGuard = 20;

class EnumerationGuardExceeded : public std::runtime_error {
public:
    EnumerationGuardExceeded(std::size_t dimension, std::size_t guard);
    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] std::size_t guard() const { return guard_; }

private:
    std::size_t dimension_;
    std::size_t guard_;
};

/// All 2^d - 1 nonzero codewords, visited in Gray-code order so each step is a
/// single XOR. Throws EnumerationGuardExceeded when d > guard; never truncates.
[[nodiscard]] std::vector<Codeword> enumerate_codewords(const NullSpaceBasis& basis,
                                                        std::size_t guard = kDefaultEnumerationGuard);

/// Small/large thresholds for an n-row matrix: small means weight <= omega,
/// large means |weight - n/2| <= sqrt(a n ln n).
struct WeightWindow {
    std::size_t n = 0;
    std::size_t omega = 0;
    double a = 4.0;

    [[nodiscard]] double half_width() const;
    [[nodiscard]] bool is_small(std::size_t w) const { return w <= omega; }
    [[nodiscard]] bool is_large(std::size_t w) const;
    [[nodiscard]] bool is_anomalous(std::size_t w) const { return !is_small(w) && !is_large(w); }
};

/// ceil(ln(n)^2).
[[nodiscard]] std::size_t default_omega(std::size_t n);

struct FundamentalSmall {
    std::vector<std::uint64_t> combinations;
    std::vector<BitVector> supports;
    /// Pairs of fundamental supports that intersect. Expected to be zero; a
    /// nonzero count is reported, not fatal.
    std::size_t overlap_violations = 0;
};

/// Small codewords whose support strictly contains no other codeword's
/// support. Only small codewords can sit inside a small one, so supports are
/// materialized for those alone.
[[nodiscard]] FundamentalSmall fundamental_small(const NullSpaceBasis& basis,
                                                 std::span<const Codeword> codewords, std::size_t omega);

/// Greedy independent set of large codewords, taken in enumeration order and
/// kept independent of the span of `small_combinations`. Works on the
/// combination masks, so no supports are built.
[[nodiscard]] std::vector<std::uint64_t> select_large_basis(std::span<const Codeword> codewords,
                                                            std::span<const std::uint64_t> small_combinations,
                                                            const WeightWindow& window);

/// Connectivity of the graph on `support` joining two rows whenever some column
/// has a 1 in both. For the owner columns this is the underlying graph of the
/// functional digraph; foreign columns hitting the support twice add the
/// cross edges. Throws std::invalid_argument if `support` is not a dependency.
[[nodiscard]] bool connected_functional_digraph(const BitMatrix& m, const BitVector& support);

/// True iff every XOR of a nonempty subset of `large_basis` has weight in
/// n/2 +- sqrt(a n ln n).
[[nodiscard]] bool is_simple_sequence(std::span<const BitVector> large_basis, std::size_t n, double a = 1.0);

/// Venn-cell sizes of k sets over [n]. sizes[x] counts rows whose membership
/// pattern equals x, with bit i of x standing for membership in set i.
struct IntersectionStructure {
    std::size_t k = 0;
    std::vector<std::size_t> sizes;
    /// Cells outside n/2^k (1 +- 4^k sqrt(ln n / n)).
    std::size_t flags = 0;
};

[[nodiscard]] IntersectionStructure intersection_structure(std::span<const BitVector> large_basis, std::size_t n);

/// (2^k - 1) x (2^k - 1) matrix with U(x, y) = <x, y> mod 2, rows and columns
/// indexed by the nonzero x, y in {0,1}^k (index x - 1). Requires 1 <= k <= 12.
using UMatrix = std::vector<std::vector<std::uint8_t>>;
[[nodiscard]] UMatrix build_U(unsigned k);

struct UProperties {
    bool symmetric = false;
    bool row_weights = false;          // every row has 2^(k-1) ones
    bool pairwise_overlap = false;     // distinct rows share 2^(k-2) ones
    bool square_identity = false;      // U^2 = 2^(k-2) (I + J) over the integers
    [[nodiscard]] bool all() const { return symmetric && row_weights && pairwise_overlap && square_identity; }
};

[[nodiscard]] UProperties check_u_properties(const UMatrix& u, unsigned k);

struct NullSpaceReport {
    std::size_t n = 0;
    std::size_t rank = 0;
    std::size_t d = 0;
    std::vector<std::size_t> weights;  // all 2^d - 1 codeword weights, enumeration order
    std::size_t sigma = 0;
    std::size_t lambda = 0;
    std::vector<std::vector<std::size_t>> small_supports;  // fundamental small, row lists
    std::vector<std::size_t> anomalies;                     // weights in neither band
    std::size_t omega = 0;
    double window_a = 4.0;

    // Structural audit.
    std::size_t overlap_violations = 0;
    std::size_t large_basis_size = 0;
    bool large_basis_matches_lambda = true;
    std::size_t connectivity_mismatches = 0;  // minimality vs connectivity disagreements
    std::size_t small_dependencies_checked = 0;
    std::size_t support_verification_failures = 0;
    bool simple_at_a1 = true;
    bool simple_at_window = true;
    std::vector<std::size_t> intersection_sizes;
    std::size_t intersection_flags = 0;

    friend bool operator==(const NullSpaceReport&, const NullSpaceReport&) = default;
};

/// Splits codewords into small, large and anomalous; sigma counts the
/// fundamental small codewords and lambda = d - sigma.
[[nodiscard]] NullSpaceReport classify(const NullSpaceBasis& basis, std::span<const Codeword> codewords,
                                       std::size_t n, std::size_t omega, double a);

struct AnalyzerOptions {
    std::size_t omega = 0;  // 0 selects default_omega(n)
    double window_a = 4.0;
    std::size_t guard = kDefaultEnumerationGuard;
};

/// Eliminate, enumerate, classify and run the structural audit on one matrix.
/// Throws EnumerationGuardExceeded when the null space is too large to walk.
[[nodiscard]] NullSpaceReport analyze(const BitMatrix& m, const AnalyzerOptions& options = {});

}  // namespace rmlab
