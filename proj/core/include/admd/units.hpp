#ifndef ADMD_UNITS_HPP
#define ADMD_UNITS_HPP

#include <numbers>

// Unit system follows the usual MD conventions: length nm, time ps, mass u,
// energy kJ/mol, temperature K. Velocity is nm/ps, force kJ mol^-1 nm^-1.
namespace admd::units {

/// Boltzmann constant in kJ mol^-1 K^-1.
inline constexpr double k_boltzmann = 0.00831446;

inline constexpr double pi = std::numbers::pi;

inline constexpr double deg_to_rad(double deg) noexcept { return deg * pi / 180.0; }

} // namespace admd::units

#endif
