#pragma once

#include <cstdint>
#include <random>

namespace jamllr {

// SplitMix64 finalizer; decorrelates structured seed inputs.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ull);
}

// Independent substream per (master_seed, frame index). Trials can run in any
// order or on any thread and still see identical draws.
inline std::mt19937_64 make_frame_rng(std::uint64_t master_seed, std::uint64_t frame_index) {
    return std::mt19937_64(mix_seed(master_seed, frame_index));
}

}  // namespace jamllr
