#ifndef ADMD_THERMO_HPP
#define ADMD_THERMO_HPP

#include <span>

#include "admd/vec.hpp"

namespace admd {

/// Total kinetic energy in kJ/mol.
double kinetic_energy(std::span<const Vec3> velocities, std::span<const double> masses);

/// Instantaneous temperature T = 2 E_kin / (N_df k_B) with N_df = 3 N - n_constraints.
/// Throws std::invalid_argument when no degrees of freedom remain.
double instantaneous_temperature(std::span<const Vec3> velocities,
                                 std::span<const double> masses,
                                 int n_constraints = 0);

/// Temperature from a precomputed kinetic energy (used when E_kin is reduced
/// across workers or averaged over half steps).
double temperature_from_kinetic(double e_kin, std::size_t n_sites, int n_constraints = 0);

} // namespace admd

#endif
