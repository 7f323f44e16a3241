#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rmlab {

using Residue = std::uint32_t;

[[nodiscard]] bool is_prime(std::uint64_t p);

/// Multiplicative inverse of a nonzero residue modulo prime p.
[[nodiscard]] Residue inverse_mod(Residue a, Residue p);

/// Dense row-major matrix with entries in Z_p, p prime.
class PrimeFieldMatrix {
public:
    /// Largest accepted modulus; keeps products of two residues inside 64 bits.
    static constexpr Residue kMaxModulus = 2'147'483'647u;

    /// Throws std::invalid_argument for a composite/out-of-range modulus or a zero dimension.
    PrimeFieldMatrix(Residue modulus, std::size_t n_rows, std::size_t n_cols);

    static PrimeFieldMatrix identity(Residue modulus, std::size_t n);

    [[nodiscard]] Residue modulus() const { return p_; }
    [[nodiscard]] std::size_t n_rows() const { return n_rows_; }
    [[nodiscard]] std::size_t n_cols() const { return n_cols_; }

    [[nodiscard]] Residue get(std::size_t row, std::size_t col) const {
        return entries_[row * n_cols_ + col];
    }
    /// Stores value mod p.
    void set(std::size_t row, std::size_t col, std::uint64_t value);
    /// entry += value (mod p).
    void accumulate(std::size_t row, std::size_t col, std::uint64_t value);

    [[nodiscard]] std::span<const Residue> row(std::size_t r) const {
        return {entries_.data() + r * n_cols_, n_cols_};
    }

    /// x·M mod p.
    [[nodiscard]] std::vector<Residue> left_multiply(std::span<const Residue> x) const;

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    Residue p_;
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<Residue> entries_;
};

}  // namespace rmlab
