#pragma once
// Deterministic random number generation.
//
// All randomness in the library flows through this engine so that results
// are bit-identical across platforms and thread counts.  Streams are split
// by deriving child seeds from a parent seed and a stream index; work units
// (trials, generations, population slots) each get their own stream, so the
// order in which they execute never changes the numbers they draw.

#include <array>
#include <cstdint>

namespace flexopt {

// splitmix64 step; also used as the seed-derivation mixer.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Child seed for an independent stream.  Chains of derive_seed calls give a
// tree of streams rooted at a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
    std::uint64_t s = parent ^ (0x9e3779b97f4a7c15ull + stream * 0xd1b54a32d192ed03ull);
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

// xoshiro256** seeded via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t seed() const { return seed_; }

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

    // Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound); bound must be > 0.  Rejection sampling,
    // so the distribution is exact.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Independent child stream; depends only on this generator's seed and the
    // stream index, never on how many values have been consumed.
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

} // namespace flexopt
