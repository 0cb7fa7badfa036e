#pragma once

#include <cstdint>

namespace cbgame {

/// Bijective 64-bit finalizer (splitmix64). Used to hash (seed, path, step)
/// keys into independent draws so path generation is order-free.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform draw in the open interval (0,1), keyed by (seed, path, step).
double uniform_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t step) noexcept;

/// Inverse of the standard normal CDF, accurate to ~1e-15 over (0,1).
double inverse_normal_cdf(double u);

/// Standard normal draw keyed by (seed, path, step).
double normal_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t step);

}  // namespace cbgame
