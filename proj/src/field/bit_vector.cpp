#include "rmlab/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmlab {

BitVector BitVector::from_words(std::span<const std::uint64_t> words, std::size_t size) {
    BitVector v(size);
    if (words.size() < v.words_.size()) {
        throw std::invalid_argument("BitVector::from_words: not enough words for requested size");
    }
    std::copy_n(words.begin(), v.words_.size(), v.words_.begin());
    if (const std::size_t tail = size % kWordBits; tail != 0) {
        v.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return v;
}

std::size_t BitVector::popcount() const {
    std::size_t count = 0;
    for (const std::uint64_t w : words_) {
        count += static_cast<std::size_t>(std::popcount(w));
    }
    return count;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::subset_of(const BitVector& other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector::subset_of: size mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool BitVector::intersects(const BitVector& other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector::intersects: size mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector::operator^=: size mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

}  // namespace rmlab
