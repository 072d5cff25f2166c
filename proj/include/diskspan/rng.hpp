#pragma once

#include <cmath>
#include <cstdint>

namespace diskspan {

/// Deterministic, splittable random stream (xoshiro256** seeded via
/// splitmix64). Draws are implemented here rather than through <random>
/// distributions so that results are identical across standard
/// libraries, which the reproducibility contract requires.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    std::uint64_t next_u64() {
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

    /// Uniform integer in [0, bound), unbiased (rejection sampling).
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound <= 1) { next_u64(); return 0; }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_double(double lo, double hi) {
        return lo + (hi - lo) * uniform_double();
    }

    /// Standard normal via Box-Muller (one value per call).
    double gaussian() {
        double u = uniform_double();
        if (u < 1e-300) u = 1e-300;
        const double v = uniform_double();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u)) * std::cos(two_pi * v);
    }

    /// Child stream addressed by (a, b). Derived from the construction
    /// seed, not the evolving state, so substreams are independent of
    /// how much the parent has been consumed.
    Rng substream(std::uint64_t a, std::uint64_t b = 0) const {
        std::uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL + a);
        std::uint64_t h = splitmix64(x);
        x = h ^ (0xbf58476d1ce4e5b9ULL + b);
        return Rng(splitmix64(x));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4] = {};
    std::uint64_t seed_ = 0;
};

}  // namespace diskspan
