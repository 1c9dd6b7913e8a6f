#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace rtri {

// splitmix64 step (Steele, Lea, Flood). Used for seeding and for deriving
// substream seeds; also the modulus search inside the field module.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Experiment RNG: xoshiro256** (Blackman & Vigna), state filled from a
// splitmix64 run over the seed. Platform-independent by construction.
//
// Stream-splitting rule, used everywhere a (seed, trial) pair feeds an
// experiment: substream i of master seed s starts from
//     seed_i = splitmix64(s ^ (i + 1) * 0x9E3779B97F4A7C15)
// so trials are independent and any trial is reproducible in isolation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL);
        std::uint64_t sm = x;
        return Rng(splitmix64(sm));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // unbiased uniform draw in [0, n), n >= 1, by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) fail(Status::bad_argument, "uniform draw from an empty range");
        const std::uint64_t threshold = (-n) % n;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    // partial Fisher-Yates: the first `take` entries of a uniformly random
    // permutation of [0, n)
    std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t take) {
        std::vector<std::uint64_t> pool(n);
        for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
        if (take > n) take = n;
        for (std::uint64_t i = 0; i < take; ++i) {
            std::uint64_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(take);
        return pool;
    }

    void shuffle(std::vector<std::uint64_t>& v) {
        for (std::uint64_t i = v.size(); i > 1; --i) {
            std::uint64_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace rtri
