#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace nsd {

// All randomness in the library flows through this wrapper around std::mt19937_64.
// The engine itself is fully specified by the standard; bounded sampling is done
// by hand (rejection) rather than via std::uniform_int_distribution, whose output
// is implementation defined. Same seed, same stream, on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform on [0, bound). bound == 1 consumes no randomness.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
        if (bound == 1) return 0;
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform on [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace nsd
