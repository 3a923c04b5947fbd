#pragma once

#include <cmath>
#include <cstdint>

namespace copulaforge {

// Counter-based 64-bit generator (splitmix64 update). The raw integer
// sequence is a pure function of the seed, so runs are reproducible across
// platforms. Child streams are derived from (seed, index) and never overlap
// the parent sequence in practice (independent mixed starting points on a
// 2^64 cycle).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed)
        : seed_(seed), state_(mix64(seed ^ 0x2545F4914F6CDD1DULL)) {}

    // Independent substream identified by (seed, index).
    RngStream child(std::uint64_t index) const {
        return RngStream(mix64(seed_ + 0x9E3779B97F4A7C15ULL * (index + 1)), tag{});
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform on the open interval (0,1); exact zeros are rejected so that
    // logs and quantile transforms never hit a singularity.
    double uniform01() {
        for (;;) {
            double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    double exponential() { return -std::log(uniform01()); }

    // Standard normal via Box-Muller; the second variate of each pair is
    // cached so draws stay aligned with the uniform stream deterministically.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    struct tag {};
    RngStream(std::uint64_t derived_seed, tag)
        : seed_(derived_seed), state_(mix64(derived_seed ^ 0x2545F4914F6CDD1DULL)) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// Clamp a sampler output into the open unit interval.
inline double clamp_unit_open(double u) {
    if (u < 0x1.0p-53) return 0x1.0p-53;
    if (u > 1.0 - 0x1.0p-53) return 1.0 - 0x1.0p-53;
    return u;
}

} // namespace copulaforge
