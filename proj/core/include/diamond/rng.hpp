#pragma once

// Counter-based and stream RNG machinery. Two use cases:
//  - keyed draws: omega(master_seed, address) must be a pure function, so
//    disorder fields need no storage (see disorder.hpp),
//  - replicate streams: replicate i of an experiment uses stream(master, i),
//    making results independent of thread scheduling.

#include <cmath>
#include <cstdint>
#include <limits>

namespace diamond::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Mix a 128-bit key (hi, lo) and a salt into one well-scrambled 64-bit word.
inline constexpr std::uint64_t mix128(std::uint64_t hi, std::uint64_t lo, std::uint64_t salt) {
    std::uint64_t h = splitmix64(salt ^ 0x8badf00d2b00b1e5ull);
    h = splitmix64(h ^ hi);
    h = splitmix64(h ^ lo);
    return h;
}

inline constexpr double u64_to_unit(std::uint64_t x) {
    // (0,1): take 53 high bits, offset by half an ulp so 0 is excluded
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

// xoshiro256++ (Blackman & Vigna), used for all sequential streams.
class Xoshiro256 {
  public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed = 1) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x += kGolden);
    }

    static Xoshiro256 stream(std::uint64_t master_seed, std::uint64_t stream_index) {
        return Xoshiro256(splitmix64(master_seed) ^ (kGolden * (stream_index + 1)));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform() { return u64_to_unit((*this)()); }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Marsaglia-Tsang ziggurat for the standard normal. Tables are built once at
// startup from the 256-layer construction (r = 3.6541528853610088).
class ZigguratNormal {
  public:
    template <class Rng>
    double operator()(Rng& rng) const {
        for (;;) {
            const std::uint64_t u = rng();
            const int idx = static_cast<int>(u & 255u);
            const std::int64_t j = static_cast<std::int64_t>(u >> 12) - (1ll << 51);
            const double x = static_cast<double>(j) * w_[idx];
            if (std::llabs(j) < k_[idx]) return x;  // fast path, ~98.8%
            if (idx == 0) return tail(rng, x < 0.0);
            const double y = f_[idx + 1] + (f_[idx] - f_[idx + 1]) * rng_unit(rng);
            if (y < density(x)) return x;
        }
    }

    static const ZigguratNormal& instance();

  private:
    ZigguratNormal();

    static double density(double x) { return std::exp(-0.5 * x * x); }

    template <class Rng>
    static double rng_unit(Rng& rng) {
        return u64_to_unit(rng());
    }

    template <class Rng>
    double tail(Rng& rng, bool negative) const {
        // Marsaglia's method for the tail beyond r
        const double r = 3.6541528853610088;
        double x, y;
        do {
            x = -std::log(rng_unit(rng)) / r;
            y = -std::log(rng_unit(rng));
        } while (y + y < x * x);
        return negative ? -(r + x) : (r + x);
    }

    double w_[256];
    double f_[257];
    std::int64_t k_[256];
};

template <class Rng>
inline double standard_normal(Rng& rng) {
    return ZigguratNormal::instance()(rng);
}

} // namespace diamond::rng
