#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rmlab {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for_bits(size), 0) {}

    /// Copies `size` bits out of packed storage; trailing bits are masked off.
    static BitVector from_words(std::span<const std::uint64_t> words, std::size_t size);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool empty() const { return size_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    [[nodiscard]] std::size_t popcount() const;
    [[nodiscard]] bool is_zero() const;

    /// True when every set bit of *this is also set in `other`.
    [[nodiscard]] bool subset_of(const BitVector& other) const;
    [[nodiscard]] bool intersects(const BitVector& other) const;

    /// Indices of the set bits, ascending.
    [[nodiscard]] std::vector<std::size_t> ones() const;

    BitVector& operator^=(const BitVector& other);

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

[[nodiscard]] inline BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
}

}  // namespace rmlab
