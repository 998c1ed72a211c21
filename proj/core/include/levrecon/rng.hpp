#ifndef LEVRECON_RNG_HPP
#define LEVRECON_RNG_HPP

#include <cstdint>

namespace levrecon {

/// SplitMix64: a counter-based generator with a 64-bit state. Streams are
/// derived from (master_seed, stream_index) so parallel and serial Monte
/// Carlo runs see identical trial randomness regardless of worker count.
/// Implemented locally (instead of <random> engines) so that sequences are
/// identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x6A09E667F3BCC909ULL)) {}

    static Rng for_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
        return Rng(master_seed ^ mix(stream_index + 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps
    /// the draw exactly uniform.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace levrecon

#endif
