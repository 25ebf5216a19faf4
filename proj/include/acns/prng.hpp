// Counter-based generator for reproducible random fields: cell k of a seeded
// field is mix64(seed + (k+1) * 0x9E3779B97F4A7C15), mapped to [0,1) with the
// top 53 bits. Pure integer arithmetic, so any language reproduces it.
#pragma once

#include <cstdint>

namespace acns {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// k-th draw in [0,1) of the stream with the given seed
inline double counter_uniform(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = mix64(seed + (k + 1) * 0x9E3779B97F4A7C15ull);
    return (z >> 11) * 0x1.0p-53;
}

}  // namespace acns
