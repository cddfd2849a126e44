#pragma once

#include <cstdint>
#include <random>

namespace vqebench {

/// splitmix64 step; used to derive independent stream seeds from a base seed.
inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0,1) from the engine's raw 64-bit output. Unlike the
/// standard distributions this mapping is fully specified, so seeded runs
/// produce identical streams on every platform.
inline double uniform_double(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_double(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform_double(eng);
}

} // namespace vqebench
