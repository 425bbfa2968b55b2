#pragma once

#include <cstdint>

namespace octobil {

/// Counter-based deterministic generator. Draw i of stream s under seed k is a
/// pure function of (k, s, i), so per-trial streams evaluated in parallel give
/// exactly the serial results.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))), counter_(0) {}

    uint64_t next() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

    /// Uniform integer in [lo, hi], unbiased (rejection sampling).
    int64_t uniform(int64_t lo, int64_t hi) {
        const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<int64_t>(next());  // full 64-bit range
        const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<int64_t>(v % range);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t mix(uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_;
};

}  // namespace octobil
