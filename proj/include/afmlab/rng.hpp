#pragma once

#include <cmath>
#include <cstdint>

namespace afmlab {

// SplitMix64: tiny, fast, and bit-for-bit reproducible on every platform,
// which std::mt19937 + std::uniform_* distributions are not.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in {0, ..., n-1}; desk-scale n, modulo bias is irrelevant here
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // inclusive range
    int int_in(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }

    double in(double lo, double hi) { return lo + unit() * (hi - lo); }

    // lo * (hi/lo)^u for u uniform — log-uniform on [lo, hi], lo > 0
    double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, unit()); }
};

} // namespace afmlab
