#ifndef ADMD_RNG_HPP
#define ADMD_RNG_HPP

#include <cmath>
#include <cstdint>

#include "admd/units.hpp"

namespace admd {

// Counter-based random numbers: every deviate is a pure function of
// (seed, site_id, step_index, component, stream). No generator state exists,
// so the noise a site receives is independent of worker layout and
// evaluation order.

namespace detail {

// SplitMix64 finalizer; bijective with strong avalanche.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c) noexcept {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

// Uniform in (0, 1); never returns 0 so log() below is safe.
inline double uniform_from_bits(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace detail

/// Independent deviate streams; the tag keeps different uses of the same
/// (site, step) counters uncorrelated.
enum class NoiseStream : std::uint64_t {
    thermostat = 1,
    init_velocities = 2,
    test = 100,
};

/// Uniform deviate in (0,1) for the given counters.
inline double rng_uniform(std::uint64_t seed, std::uint64_t site_id, std::uint64_t step_index,
                          std::uint32_t component, NoiseStream stream, std::uint32_t lane = 0) {
    const std::uint64_t c = (static_cast<std::uint64_t>(stream) << 32) |
                            (static_cast<std::uint64_t>(component) << 8) | lane;
    return detail::uniform_from_bits(detail::counter_hash(seed, site_id, step_index, c));
}

/// Standard normal deviate for (seed, site_id, step_index, component) via Box-Muller.
inline double rng_stream(std::uint64_t seed, std::uint64_t site_id, std::uint64_t step_index,
                         std::uint32_t component, NoiseStream stream = NoiseStream::thermostat) {
    const double u1 = rng_uniform(seed, site_id, step_index, component, stream, 0);
    const double u2 = rng_uniform(seed, site_id, step_index, component, stream, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * units::pi * u2);
}

} // namespace admd

#endif
