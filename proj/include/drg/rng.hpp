#pragma once

// Counter-based pseudo-random generator used by every simulation path.
// Output i depends only on (seed, i), so sample blocks can be assigned to
// worker threads in any order while the stream stays byte-for-byte
// reproducible for a fixed seed. The algorithm is splitmix64 driven by an
// incrementing counter; its identity string is recorded in simulation output.

#include <cstdint>

namespace drg {

inline constexpr const char* kRngAlgorithm = "splitmix64-counter";

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    // Independent substream: used to give each sample its own generator.
    CounterRng substream(uint64_t index) const {
        return CounterRng(splitmix64(seed_ ^ (0xA0761D6478BD642Full + index)));
    }

    uint64_t next() {
        return splitmix64(seed_ + counter_++ * 0x9E3779B97F4A7C15ull);
    }

    // Uniform in [0, bound), bias-free via rejection.
    uint32_t below(uint32_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return static_cast<uint32_t>(x % bound);
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

} // namespace drg
