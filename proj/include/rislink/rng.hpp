// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace rislink {

/// splitmix64 finalizer; used for seeding and stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Purpose tags for per-trial substreams. Every trial owns one independent
/// stream per purpose, derived only from (master seed, trial index, purpose),
/// so results do not depend on evaluation order, thread count, or on how many
/// draws other purposes consume. Element fades are drawn sequentially from
/// their stream, which makes the first N fades identical for every panel size
/// >= N (common random numbers across element-count sweeps).
enum class StreamPurpose : std::uint64_t {
    UserDrop = 0,
    LosStatic = 1,
    LosTxRis = 2,
    LosRisRx = 3,
    ShadowStatic = 4,
    ShadowTxRis = 5,
    ShadowRisRx = 6,
    FadeStatic = 7,
    FadeTxRis = 8,
    FadeRisRx = 9,
};

/// xoshiro256++ generator with explicit stream derivation. Sequences are a
/// pure function of the seed; nothing is cached between calls, so two
/// generators constructed alike produce bit-identical draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s += 0x9e3779b97f4a7c15ULL;
            word = mix64(s);
        }
        // xoshiro must not start from the all-zero state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static Rng for_stream(std::uint64_t master_seed, std::uint64_t trial, StreamPurpose purpose) {
        std::uint64_t h = mix64(master_seed);
        h = mix64(h ^ trial);
        h = mix64(h ^ static_cast<std::uint64_t>(purpose));
        return Rng(h);
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

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// One standard-normal pair via Box-Muller.
    void gaussian_pair(double& g0, double& g1) {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double phi = two_pi() * uniform();
        g0 = r * std::cos(phi);
        g1 = r * std::sin(phi);
    }

    double gaussian() {
        double g0, g1;
        gaussian_pair(g0, g1);
        return g0;
    }

    /// Circularly-symmetric complex normal, E[|z|^2] = 1.
    std::complex<double> complex_normal() {
        double g0, g1;
        gaussian_pair(g0, g1);
        constexpr double inv_sqrt2 = 0.7071067811865476;
        return {g0 * inv_sqrt2, g1 * inv_sqrt2};
    }

    static constexpr double two_pi() { return 6.283185307179586476925286766559; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace rislink
