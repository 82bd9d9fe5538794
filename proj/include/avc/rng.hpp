#pragma once

#include <cstdint>

#include "avc/rational.hpp"

namespace avc {

// splitmix64: tiny, seedable, reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on the 2^-20 lattice of [lo, hi): lo + (hi - lo) * k / 2^20.
    Rat uniform_lattice(const Rat& lo, const Rat& hi) {
        const long denom = 1L << 20;
        long k = static_cast<long>(next() >> 44);
        return lo + (hi - lo) * rat(k, denom);
    }

    // Exact Bernoulli(p) for rational p using a 53-bit uniform.
    bool bernoulli(const Rat& p) {
        Rat u = rat(static_cast<long>(next() >> 11), 1L << 53);
        return u < p;
    }

    // Integer in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }

    // Derived stream for (seed, index) pairs.
    static uint64_t derive(uint64_t master, uint64_t index) {
        SplitMix64 s(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return s.next();
    }

private:
    uint64_t state_;
};

}  // namespace avc
