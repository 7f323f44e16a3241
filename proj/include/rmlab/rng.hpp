#pragma once

#include <cstdint>
#include <random>

namespace rmlab {

__extension__ using uint128 = unsigned __int128;

/// SplitMix64 finalizer; used as the stable seed hash.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-trial seed. Stable across runs, platforms and worker counts.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return mix64(master_seed ^ mix64(trial));
}

/// Portable stream: std::mt19937_64 is bit-specified by the standard, the
/// library distributions are not, so bounded draws are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound), unbiased (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = engine_();
        auto m = static_cast<uint128>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = engine_();
                m = static_cast<uint128>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace rmlab
