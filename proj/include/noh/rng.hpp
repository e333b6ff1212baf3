#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace noh {

/// splitmix64 output function (Steele, Lea & Flood / Vigna). Used to expand
/// seeds and to derive independent per-replica streams.
inline std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the index-th substream of a base seed. splitmix64 is a counter
/// mode permutation, so this is exactly "advance the splitmix state index
/// steps and take one output".
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    return splitmix64_mix(base + index * 0x9e3779b97f4a7c15ULL);
}

/// xoshiro256** 1.0 (Blackman & Vigna, 2018). Pinned here so that seeded
/// runs reproduce bit-for-bit across platforms and standard libraries.
class xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit xoshiro256(std::uint64_t seed)
    {
        // Expand the seed through splitmix64 as recommended by the authors;
        // guarantees a nonzero state for every seed.
        std::uint64_t z = seed;
        for (auto &word : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            word = splitmix64_mix(z);
        }
    }

    std::uint64_t operator()() { return next(); }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double strictly inside (0, 1). The half-step offset keeps both
    /// endpoints out, so -log(u) is always positive and finite.
    double uniform_open01()
    {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Exponential variate with the given rate via inverse CDF.
    double exponential(double rate) { return -std::log(uniform_open01()) / rate; }

    /// Standard normal via Box-Muller; consumes exactly two words.
    double normal()
    {
        const double u1 = uniform_open01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Unbiased integer in [0, n). Lemire's nearly-divisionless method.
    std::uint64_t bounded(std::uint64_t n)
    {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k)
    {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

} // namespace noh
