// Seeded PRNG for reproducible campaigns. Hand-rolled SplitMix64 (Steele,
// Lea, Flood constants): std::uniform_int_distribution is
// implementation-defined, so identical seeds would not reproduce across
// standard libraries.
#pragma once

#include <cstdint>

namespace butterfly {

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform in [0, bound); unbiased via rejection. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

/// Independent substream for sample `index` of a campaign seed, so parallel
/// and serial evaluation orders draw identical values.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))));
}

} // namespace butterfly
