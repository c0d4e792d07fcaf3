#pragma once

#include <cstdint>
#include <string_view>

namespace gcol {

/// Deterministic 64-bit stream (splitmix64). We avoid <random>
/// distributions on purpose: their output is implementation-defined, and
/// the CLI promises byte-identical transcripts for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be > 0.
    uint64_t next_below(uint64_t bound) {
        // Lemire's multiply-shift with rejection for exact uniformity.
        uint64_t x = next_u64();
        __uint128_t m = (__uint128_t)x * bound;
        uint64_t lo = (uint64_t)m;
        if (lo < bound) {
            uint64_t t = (0 - bound) % bound;
            while (lo < t) {
                x = next_u64();
                m = (__uint128_t)x * bound;
                lo = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

    int next_int(int bound) { return int(next_below(uint64_t(bound))); }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Derived independent stream; used to give components named
    /// sub-streams of the single CLI seed.
    Rng fork(std::string_view tag) const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (char c : tag) {
            h ^= uint8_t(c);
            h *= 0x100000001b3ull;
        }
        Rng r(state_ ^ h);
        r.next_u64();
        return r;
    }
    Rng fork(uint64_t tag) const {
        Rng r(state_ ^ (tag * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull));
        r.next_u64();
        return r;
    }

private:
    uint64_t state_;
};

} // namespace gcol
