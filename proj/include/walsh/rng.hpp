#pragma once

#include <cstdint>

namespace walsh {

/// splitmix64: fixed, portable generator used for every seeded family, so
/// regression values stay identical across platforms and languages.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 random bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1,1)
    double pm1() { return 2.0 * unit() - 1.0; }

    // fair +-1
    double sign() { return (next() >> 63) ? -1.0 : 1.0; }
};

// Splitting rule for per-index streams: hash (seed, index) through the
// splitmix64 finalizer. Documented so any failure is reproducible standalone.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace walsh
