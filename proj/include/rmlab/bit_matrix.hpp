#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmlab/bit_vector.hpp"

namespace rmlab {

/// Dense row-major matrix over GF(2). Each row occupies words_per_row()
/// consecutive 64-bit words; padding bits past n_cols() stay zero.
class BitMatrix {
public:
    /// Throws std::invalid_argument when either dimension is zero.
    BitMatrix(std::size_t n_rows, std::size_t n_cols);

    static BitMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t n_rows() const { return n_rows_; }
    [[nodiscard]] std::size_t n_cols() const { return n_cols_; }
    [[nodiscard]] std::size_t words_per_row() const { return stride_; }

    [[nodiscard]] bool get(std::size_t row, std::size_t col) const {
        return (words_[row * stride_ + col / kWordBits] >> (col % kWordBits)) & 1u;
    }
    void set(std::size_t row, std::size_t col, bool value = true);
    void flip(std::size_t row, std::size_t col) {
        words_[row * stride_ + col / kWordBits] ^= std::uint64_t{1} << (col % kWordBits);
    }

    [[nodiscard]] std::span<const std::uint64_t> row_words(std::size_t row) const {
        return {words_.data() + row * stride_, stride_};
    }
    [[nodiscard]] std::span<std::uint64_t> row_words(std::size_t row) {
        return {words_.data() + row * stride_, stride_};
    }
    [[nodiscard]] BitVector row(std::size_t row) const;

    /// Number of ones in column `col`.
    [[nodiscard]] std::size_t column_weight(std::size_t col) const;

    /// Left product x·M over GF(2); x has n_rows() entries.
    [[nodiscard]] BitVector left_multiply(const BitVector& x) const;

    void swap_rows(std::size_t a, std::size_t b);
    [[nodiscard]] BitMatrix permuted(std::span<const std::size_t> row_perm,
                                     std::span<const std::size_t> col_perm) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

}  // namespace rmlab
