#pragma once

#include <cstdint>

namespace bcd {

// Counter-based 64-bit generator: output i is a bijective mix of
// seed + (i+1)*phi, where phi is the 64-bit golden-ratio constant
// (the splitmix64 finalizer).  Stateless apart from the counter, so a
// stream can be replayed or indexed at random, and two generators with
// the same seed always produce the same sequence regardless of how the
// draws are interleaved with other work.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return at(counter_++); }

    // i-th value of the stream, independent of next() calls.
    std::uint64_t at(std::uint64_t i) const {
        std::uint64_t z = seed_ + (i + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) by rejection: values below
    // 2^64 mod bound are rediscarded so every residue is equally likely.
    // A plain modulo would skew small indices, which matters here because
    // the sampling estimator's unbiasedness assumes exact uniformity.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ull - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform double in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace bcd
