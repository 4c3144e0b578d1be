#pragma once

#include <cstdint>

namespace strongid {

/// SplitMix64 (Steele, Lea, Flood 2014). One fixed 64-bit generator is used
/// for every random draw in the library so that a (seed, input) pair produces
/// the same output on every platform and build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) built from the top 53 bits of next().
    double uniform53() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Bernoulli(q) draw: uniform53() < q. Always false for q <= 0,
    /// always true for q >= 1.
    bool bernoulli(double q) { return uniform53() < q; }

private:
    std::uint64_t state_;
};

/// SplitMix64 finalizer, usable as a standalone 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic per-substream seed: mixes a master seed with a stream tag
/// and an index. Used wherever one user-facing seed has to drive many
/// independent draws (retry attempts, chain blocks, experiment trials), so
/// that results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ mix64(stream));
    h = mix64(h ^ mix64(index));
    return h;
}

/// Stream tags for derive_seed.
enum : std::uint64_t {
    kStreamLemmaAttempt = 0xA1,
    kStreamChainBlock = 0xB2,
    kStreamTrial = 0xC3,
};

}  // namespace strongid
