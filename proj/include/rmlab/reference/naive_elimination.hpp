#pragma once

// Straightforward O(n^3) elimination on one byte/word per entry. Serial and
// deliberately unoptimized: it is the cross-check for the packed kernels and
// the baseline in the benchmark. Not linked into the main library.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rmlab/bit_matrix.hpp"
#include "rmlab/prime_field_matrix.hpp"

namespace rmlab::reference {

using DenseGf2 = std::vector<std::vector<std::uint8_t>>;
using DenseGfp = std::vector<std::vector<std::uint64_t>>;

[[nodiscard]] DenseGf2 to_dense(const BitMatrix& m);
[[nodiscard]] DenseGfp to_dense(const PrimeFieldMatrix& m);

[[nodiscard]] std::size_t naive_gf2_rank(DenseGf2 a);
[[nodiscard]] std::size_t naive_gfp_rank(DenseGfp a, std::uint64_t p);

/// Left null space basis via elimination on the transpose (Mᵀ·xᵀ = 0),
/// reduced-echelon back substitution; an independent route from the
/// transform-carrying kernel.
[[nodiscard]] std::vector<std::vector<std::uint8_t>> naive_gf2_left_kernel(const DenseGf2& a);

}  // namespace rmlab::reference
