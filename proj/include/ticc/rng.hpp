#ifndef TICC_RNG_HPP
#define TICC_RNG_HPP

#include <array>
#include <cstdint>
#include <string_view>

// Deterministic random number generation.
//
// All randomness in this project flows through Xoshiro256** seeded via
// splitmix64, so results are bit-identical across platforms and standard
// library implementations (std::uniform_int_distribution and friends are
// not specified bit-exactly and are deliberately avoided).
//
// Sub-seeds are derived from a single master seed with derive_seed():
//   derive_seed(master, tag, a, b) =
//       mix(mix(mix(master ^ fnv1a64(tag)) ^ a) ^ b)
// where mix is the splitmix64 finalizer. Any individual trial can be
// re-run in isolation from (master seed, purpose tag, indices).

namespace ticc {

inline constexpr const char* kPrngName = "xoshiro256ss";

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64_mix(master ^ fnv1a64(tag));
    s = splitmix64_mix(s ^ a);
    s = splitmix64_mix(s ^ b);
    return s;
}

/// Xoshiro256** by Blackman & Vigna, state expanded from the seed with
/// successive splitmix64 outputs (the reference seeding procedure).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9e3779b97f4a7c15ull;
            std::uint64_t w = z;
            w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ull;
            w = (w ^ (w >> 27)) * 0x94d049bb133111ebull;
            word = w ^ (w >> 31);
        }
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

    /// Unbiased uniform draw from {0, ..., bound-1}; bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        // Rejection sampling over the largest multiple of bound.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

} // namespace ticc

#endif
