#pragma once

#include <cstdint>
#include <random>

namespace replearn::rng {

// SplitMix64 step. Used for hashing seeds and deriving independent
// sub-stream seeds; the standard distributions are avoided everywhere
// because their output is implementation-defined and this project
// promises bit-identical results for a given seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives a child seed from a parent seed and an ordered list of parts
/// (e.g. grid coordinates). Distinct part lists give unrelated seeds.
inline std::uint64_t derive_seed(std::uint64_t parent) {
    return splitmix64(parent);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t part, Rest... rest) {
    std::uint64_t s = parent;
    std::uint64_t h = splitmix64(s) ^ (part * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return derive_seed(splitmix64(h), static_cast<std::uint64_t>(rest)...);
}

/// Seeded random stream with portable draw semantics. The engine
/// (mt19937_64) is fully specified by the standard; the uniform helpers
/// below are fixed here so that every platform produces the same values.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    /// Uniform integer in [0, n), unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = engine_();
            if (x >= threshold) return x % n;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace replearn::rng
