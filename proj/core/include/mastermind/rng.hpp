// rng.hpp -- deterministic seeded generation of random secrets
//
// splitmix64 keeps benchmark output byte-identical across platforms
// and standard libraries, which std::uniform_int_distribution does not
// guarantee.

#pragma once

#include <cstdint>
#include <limits>

#include "mastermind/code.hpp"

namespace mastermind {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound)
    {
        std::uint64_t x, r;
        do {
            x = next();
            r = x % bound;
        } while (x - r > std::numeric_limits<std::uint64_t>::max() - (bound - 1));
        return r;
    }

    /// Mixes extra words into the stream, for deriving per-trial seeds.
    SplitMix64 &absorb(std::uint64_t word)
    {
        state_ = next() ^ (word * 0xD1B54A32D192ED03ULL);
        return *this;
    }

private:
    std::uint64_t state_;
};

/// Each position independently uniform over [0, K).
inline CodeVector random_secret(int length, int num_colors, SplitMix64 &rng)
{
    CodeVector secret(static_cast<std::size_t>(length));
    for (Color &c : secret)
        c = static_cast<Color>(rng.next_below(static_cast<std::uint64_t>(num_colors)));
    return secret;
}

} // namespace mastermind
