#ifndef SFCPLAN_RNG_HPP
#define SFCPLAN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sfcplan {

// splitmix64 step; used for seeding and for deriving per-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Pure function of (base, stream); replications and per-row simulation
/// streams get their seeds from here so results never depend on execution
/// order or parallelism.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base;
    std::uint64_t mixed = splitmix64(s) ^ (stream * 0xD1342543DE82EF95ULL);
    return splitmix64(mixed);
}

/// xoshiro256++ generator. Self-contained so that sequences are identical
/// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in (0,1]; never returns 0, so -log(u) is always finite.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Bernoulli draw with success probability p.
    bool bernoulli(double p) { return next_unit() <= p; }

    /// Exponential variate with the given rate, by inverse transform.
    double exponential(double rate) { return -std::log(next_unit()) / rate; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

/// Inverse-transform map from a uniform u in (0,1] to an exponential
/// variate; exposed separately so the transform can be checked against
/// known points.
inline double exponential_from_uniform(double u, double rate) {
    return -std::log(u) / rate;
}

} // namespace sfcplan

#endif
