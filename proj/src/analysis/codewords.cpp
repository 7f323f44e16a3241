#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "rmlab/analyzer.hpp"

namespace rmlab {

EnumerationGuardExceeded::EnumerationGuardExceeded(std::size_t dimension, std::size_t guard)
    : std::runtime_error("null space dimension " + std::to_string(dimension) + " exceeds enumeration guard " +
                         std::to_string(guard)),
      dimension_(dimension),
      guard_(guard) {}

std::vector<Codeword> enumerate_codewords(const NullSpaceBasis& basis, std::size_t guard) {
    const std::size_t d = basis.dimension();
    if (d > guard || d >= 64) {
        throw EnumerationGuardExceeded(d, guard);
    }
    std::vector<Codeword> out;
    if (d == 0) {
        return out;
    }
    const std::uint64_t count = (std::uint64_t{1} << d) - 1;
    out.reserve(count);
    BitVector acc(basis.source_rows);
    std::uint64_t gray = 0;
    for (std::uint64_t step = 1; step <= count; ++step) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(step));
        gray ^= std::uint64_t{1} << flip;
        acc ^= basis.vectors[flip];
        out.push_back({gray, acc.popcount()});
    }
    return out;
}

double WeightWindow::half_width() const {
    if (n < 2) {
        return 0.0;
    }
    const double nn = static_cast<double>(n);
    return std::sqrt(a * nn * std::log(nn));
}

bool WeightWindow::is_large(std::size_t w) const {
    return std::abs(static_cast<double>(w) - static_cast<double>(n) / 2.0) <= half_width();
}

std::size_t default_omega(std::size_t n) {
    if (n < 2) {
        return 0;
    }
    const double l = std::log(static_cast<double>(n));
    return static_cast<std::size_t>(std::ceil(l * l));
}

FundamentalSmall fundamental_small(const NullSpaceBasis& basis, std::span<const Codeword> codewords,
                                   std::size_t omega) {
    struct Small {
        std::uint64_t combination;
        std::size_t weight;
        BitVector support;
    };
    std::vector<Small> small;
    for (const Codeword& cw : codewords) {
        if (cw.weight <= omega) {
            small.push_back({cw.combination, cw.weight, combine_codewords(basis, cw.combination)});
        }
    }
    std::stable_sort(small.begin(), small.end(),
                     [](const Small& a, const Small& b) { return a.weight < b.weight; });

    FundamentalSmall out;
    for (std::size_t i = 0; i < small.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i && small[j].weight < small[i].weight; ++j) {
            if (small[j].support.subset_of(small[i].support)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.combinations.push_back(small[i].combination);
            out.supports.push_back(small[i].support);
        }
    }
    for (std::size_t i = 0; i < out.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < out.supports.size(); ++j) {
            if (out.supports[i].intersects(out.supports[j])) {
                ++out.overlap_violations;
            }
        }
    }
    return out;
}

namespace {

// Echelon basis of masks keyed by highest set bit.
class MaskSpan {
public:
    bool insert(std::uint64_t v) {
        for (const std::uint64_t b : rows_) {
            v = std::min(v, v ^ b);
        }
        if (v == 0) {
            return false;
        }
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
        return true;
    }

private:
    std::vector<std::uint64_t> rows_;  // descending, distinct leading bits
};

}  // namespace

std::vector<std::uint64_t> select_large_basis(std::span<const Codeword> codewords,
                                               std::span<const std::uint64_t> small_combinations,
                                               const WeightWindow& window) {
    MaskSpan span;
    for (const std::uint64_t s : small_combinations) {
        span.insert(s);
    }
    std::vector<std::uint64_t> out;
    for (const Codeword& cw : codewords) {
        if (window.is_large(cw.weight) && span.insert(cw.combination)) {
            out.push_back(cw.combination);
        }
    }
    return out;
}

}  // namespace rmlab
