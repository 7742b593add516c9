#ifndef LATTICETILE_RNG_HPP
#define LATTICETILE_RNG_HPP

#include <cstdint>
#include <random>

#include "latticetile/rational.hpp"

namespace latticetile {

// Deterministic helper around mt19937_64. Only raw engine words are mapped
// to values (no std distributions), so outputs are reproducible from the
// seed across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform dyadic rational a / 2^bits in [0, 1).
    Rational dyadic(unsigned bits) {
        std::uint64_t a = next() >> (64 - bits);
        Rational q(static_cast<unsigned long>(a), 1);
        q /= Rational(Int(1) << bits);
        return q;
    }

    // Uniform integer in [lo, hi], inclusive. Rejection sampled.
    long uniformInt(long lo, long hi) {
        std::uint64_t span = std::uint64_t(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + long(v % span);
    }

    // Derived stream for reproducible per-item sampling (splitmix64 mix).
    static std::uint64_t derive(std::uint64_t base, std::uint64_t item) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (item + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace latticetile

#endif
