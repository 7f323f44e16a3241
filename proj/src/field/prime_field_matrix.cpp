#include "rmlab/prime_field_matrix.hpp"

#include <stdexcept>
#include <string>

namespace rmlab {

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    if (p % 2 == 0) {
        return p == 2;
    }
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

Residue inverse_mod(Residue a, Residue p) {
    // Extended Euclid on signed 64-bit values.
    std::int64_t r0 = p, r1 = a % p;
    std::int64_t s0 = 0, s1 = 1;
    if (r1 == 0) {
        throw std::domain_error("inverse_mod: zero has no inverse");
    }
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) {
        throw std::domain_error("inverse_mod: value not invertible");
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(p);
    if (inv < 0) {
        inv += p;
    }
    return static_cast<Residue>(inv);
}

PrimeFieldMatrix::PrimeFieldMatrix(Residue modulus, std::size_t n_rows, std::size_t n_cols)
    : p_(modulus), n_rows_(n_rows), n_cols_(n_cols) {
    if (modulus > kMaxModulus || !is_prime(modulus)) {
        throw std::invalid_argument("PrimeFieldMatrix: modulus " + std::to_string(modulus) +
                                    " is not an admissible prime");
    }
    if (n_rows == 0 || n_cols == 0) {
        throw std::invalid_argument("PrimeFieldMatrix: dimensions must be positive");
    }
    entries_.assign(n_rows * n_cols, 0);
}

PrimeFieldMatrix PrimeFieldMatrix::identity(Residue modulus, std::size_t n) {
    PrimeFieldMatrix m(modulus, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

void PrimeFieldMatrix::set(std::size_t row, std::size_t col, std::uint64_t value) {
    entries_[row * n_cols_ + col] = static_cast<Residue>(value % p_);
}

void PrimeFieldMatrix::accumulate(std::size_t row, std::size_t col, std::uint64_t value) {
    Residue& e = entries_[row * n_cols_ + col];
    e = static_cast<Residue>((static_cast<std::uint64_t>(e) + value % p_) % p_);
}

std::vector<Residue> PrimeFieldMatrix::left_multiply(std::span<const Residue> x) const {
    if (x.size() != n_rows_) {
        throw std::invalid_argument("PrimeFieldMatrix::left_multiply: vector length must equal n_rows");
    }
    std::vector<std::uint64_t> acc(n_cols_, 0);
    for (std::size_t r = 0; r < n_rows_; ++r) {
        if (x[r] == 0) {
            continue;
        }
        const auto src = row(r);
        for (std::size_t c = 0; c < n_cols_; ++c) {
            acc[c] = (acc[c] + static_cast<std::uint64_t>(x[r]) * src[c]) % p_;
        }
    }
    return {acc.begin(), acc.end()};
}

}  // namespace rmlab
