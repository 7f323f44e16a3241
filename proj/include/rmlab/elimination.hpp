#pragma once

// Rank and LEFT null space {x : x·M = 0}. Most linear algebra packages hand
// back the column kernel {y : M·y = 0}; everything here works with row
// dependencies instead, because a dependency is a set of rows summing to zero.

#include <cstddef>
#include <span>
#include <vector>

#include "rmlab/bit_matrix.hpp"
#include "rmlab/bit_vector.hpp"
#include "rmlab/prime_field_matrix.hpp"

namespace rmlab {

/// Basis of the left null space of a GF(2) matrix. Each vector has one bit per
/// row of the source matrix.
struct NullSpaceBasis {
    std::size_t source_rows = 0;
    std::vector<BitVector> vectors;

    [[nodiscard]] std::size_t dimension() const { return vectors.size(); }
};

struct Gf2Elimination {
    std::size_t rank = 0;
    NullSpaceBasis basis;
};

struct GfpElimination {
    std::size_t rank = 0;
    std::vector<std::vector<Residue>> basis;
};

/// Row elimination carrying an n_rows x n_rows transform that starts as the
/// identity. Transform rows aligned with the zero rows of the reduced matrix
/// form the returned basis, so rank + basis.dimension() == n_rows.
///
/// The row-update loop is OpenMP-parallel for large matrices when called
/// outside an active parallel region.
[[nodiscard]] Gf2Elimination gf2_rank_nullspace(const BitMatrix& m);

/// Rank only; skips the transform.
[[nodiscard]] std::size_t gf2_rank(const BitMatrix& m);

/// Same contract as gf2_rank_nullspace over Z_p.
[[nodiscard]] GfpElimination gfp_rank_nullspace(const PrimeFieldMatrix& m);

[[nodiscard]] std::size_t gfp_rank(const PrimeFieldMatrix& m);

/// GF(2) sum of the basis vectors selected by `mask` (mask.size() == dimension).
[[nodiscard]] BitVector combine_codewords(const NullSpaceBasis& basis, const std::vector<bool>& mask);

/// Same, with the selection packed into the low bits of an integer.
[[nodiscard]] BitVector combine_codewords(const NullSpaceBasis& basis, std::uint64_t mask);

}  // namespace rmlab
