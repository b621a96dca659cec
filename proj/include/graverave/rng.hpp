#pragma once

#include <array>
#include <cstdint>

namespace graverave {

// splitmix64 finalizer step (Steele, Lea, Flood 2014). Used both as the
// seeding expander for Rng and as the documented hash behind derived
// experiment seeds. Constants are the published ones.
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256** 1.0 (Blackman & Vigna 2018), state expanded from the seed via
// splitmix64. Both algorithms are fixed published ones, so every stream is
// reproducible across platforms and compilers.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0,1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer on the inclusive range [lo, hi]. Plain modulo
    // reduction: the bias is < 2^-50 for every range used here and the
    // mapping is part of the pinned stream definition.
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    // Uniform real on [lo, hi).
    double uniform_real(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
};

}  // namespace graverave
