#include "rmlab/bit_matrix.hpp"

#include <stdexcept>

namespace rmlab {

BitMatrix::BitMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), stride_(words_for_bits(n_cols)) {
    if (n_rows == 0 || n_cols == 0) {
        throw std::invalid_argument("BitMatrix: dimensions must be positive");
    }
    words_.assign(n_rows_ * stride_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
    std::uint64_t& w = words_[row * stride_ + col / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
}

BitVector BitMatrix::row(std::size_t r) const {
    return BitVector::from_words(row_words(r), n_cols_);
}

std::size_t BitMatrix::column_weight(std::size_t col) const {
    std::size_t weight = 0;
    for (std::size_t r = 0; r < n_rows_; ++r) {
        weight += get(r, col) ? 1 : 0;
    }
    return weight;
}

BitVector BitMatrix::left_multiply(const BitVector& x) const {
    if (x.size() != n_rows_) {
        throw std::invalid_argument("BitMatrix::left_multiply: vector length must equal n_rows");
    }
    BitVector out(n_cols_);
    auto acc = out.words();
    for (const std::size_t r : x.ones()) {
        const auto src = row_words(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            acc[w] ^= src[w];
        }
    }
    return out;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t w = 0; w < stride_; ++w) {
        std::swap(ra[w], rb[w]);
    }
}

BitMatrix BitMatrix::permuted(std::span<const std::size_t> row_perm,
                              std::span<const std::size_t> col_perm) const {
    if (row_perm.size() != n_rows_ || col_perm.size() != n_cols_) {
        throw std::invalid_argument("BitMatrix::permuted: permutation size mismatch");
    }
    BitMatrix out(n_rows_, n_cols_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
        for (std::size_t c = 0; c < n_cols_; ++c) {
            if (get(r, c)) {
                out.set(row_perm[r], col_perm[c]);
            }
        }
    }
    return out;
}

}  // namespace rmlab
