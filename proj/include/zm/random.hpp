#pragma once

#include <cstdint>
#include <random>

#include "zm/rational.hpp"

namespace zm {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); rejection sampling so the law is exactly
/// uniform and reproducible for a given seed on any platform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Uniform big integer in [0, bound), exact law, via 64-bit limbs + rejection.
inline Integer uniform_below(Rng& rng, const Integer& bound) {
    if (bound <= 0) return 0;
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        Integer r = 0;
        for (std::size_t w = 0; w < words; ++w) {
            r <<= 64;
            std::uint64_t limb = rng();
            Integer l;
            mpz_import(l.get_mpz_t(), 1, 1, sizeof(limb), 0, 0, &limb);
            r |= l;
        }
        r >>= (words * 64 - bits);  // keep exactly `bits` random bits
        if (r < bound) return r;
    }
}

}  // namespace zm
