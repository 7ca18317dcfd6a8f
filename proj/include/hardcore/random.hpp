#pragma once

#include <cstddef>
#include <random>

namespace hardcore {

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, bound) by multiply-shift.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound)
{
    return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace hardcore
