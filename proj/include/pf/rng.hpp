// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pf/math.hpp"

namespace pf {

// Minimal PCG32 (O'Neill, pcg-random.org). Chosen for cheap independent
// streams: every (photon index, pixel sample, training sample, ...) owns a
// private stream derived from the config seed, so results do not depend on
// worker count or scheduling.
class Pcg32 {
  public:
    Pcg32() { seed(0x853c49e6748fea9bULL, 0xda3e39cb94b95bdbULL); }
    Pcg32(uint64_t initstate, uint64_t initseq) { seed(initstate, initseq); }

    void seed(uint64_t initstate, uint64_t initseq) {
        state_ = 0u;
        inc_ = (initseq << 1u) | 1u;
        next_u32();
        state_ += initstate;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in [0, 1) with full 53-bit mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    uint32_t next_below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<uint64_t>(next_u32()) * n) >> 32);
    }

  private:
    uint64_t state_ = 0;
    uint64_t inc_ = 0;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Named sub-streams hanging off one config seed. Components can be re-run
// independently and still reproduce bit-for-bit.
enum class Stream : uint64_t {
    Trace = 1,
    Train = 2,
    CameraSample = 3,
    Nee = 4,
    PathTrace = 5,
    FieldInit = 6,
    Synth = 7,
    Test = 8,
};

inline Pcg32 make_rng(uint64_t seed, Stream stream, uint64_t index) {
    uint64_t initstate = splitmix64(seed ^ (static_cast<uint64_t>(stream) * 0x9e3779b97f4a7c15ULL));
    return Pcg32(initstate, index);
}

inline Vec3 sample_uniform_sphere(Pcg32 &rng) {
    double z = 1.0 - 2.0 * rng.next_double();
    double phi = kTwoPi * rng.next_double();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace pf
