#pragma once

#include <cstdint>

namespace nscb {

// Counter-based generator: the value at index i is a pure function of
// (seed, i), so streams are reproducible across platforms and safe to sample
// in any order. Mixing is SplitMix64 applied to seed ^ golden-ratio stream of
// the index.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t index) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller on the (2*index, 2*index+1) pair.
    double gaussian(std::uint64_t index) const;

private:
    std::uint64_t seed_;
};

}  // namespace nscb
