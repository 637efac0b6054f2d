#pragma once

#include <cstdint>

namespace navtest {

/// splitmix64 — tiny deterministic PRNG with a 64-bit state. Chosen because
/// its output sequence is identical on every platform and compiler, which the
/// data dictionary and benchmark reproducibility guarantees depend on.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n). Modulo bias is negligible for the pool
    /// sizes used here and keeps the reduction platform-stable.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace navtest
