#pragma once

#include <cstdint>
#include <random>

namespace isacnet {

// splitmix64 step; used to derive well-separated substream seeds from a
// master seed so that trial t is reproducible regardless of which worker
// thread executes it.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xD6E8FEB86659FD93ull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x2545F4914F6CDD1Dull);
}

// Counter-based substream: engine for (master seed, stream index).
inline std::mt19937_64 substream_engine(std::uint64_t master, std::uint64_t stream) {
    return std::mt19937_64(mix_seed(master, stream));
}

// Stable stream ids for named experiment stages, so CSV outputs are
// invariant to scheduling and to unrelated stages being added or removed.
inline std::uint64_t stream_id(std::uint64_t tag, std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = tag;
    splitmix64(s);
    s ^= a * 0x9E3779B97F4A7C15ull;
    splitmix64(s);
    s ^= b * 0xC2B2AE3D27D4EB4Full;
    return splitmix64(s);
}

} // namespace isacnet
