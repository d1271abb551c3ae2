#include "admd/thermo.hpp"

#include <cassert>
#include <stdexcept>

#include "admd/units.hpp"

namespace admd {

double kinetic_energy(std::span<const Vec3> velocities, std::span<const double> masses) {
    assert(velocities.size() == masses.size());
    double e = 0.0;
    for (std::size_t i = 0; i < velocities.size(); ++i)
        e += 0.5 * masses[i] * norm2(velocities[i]);
    return e;
}

double temperature_from_kinetic(double e_kin, std::size_t n_sites, int n_constraints) {
    const long n_df = 3 * static_cast<long>(n_sites) - n_constraints;
    if (n_df <= 0)
        throw std::invalid_argument("temperature undefined: no degrees of freedom");
    return 2.0 * e_kin / (static_cast<double>(n_df) * units::k_boltzmann);
}

double instantaneous_temperature(std::span<const Vec3> velocities,
                                 std::span<const double> masses,
                                 int n_constraints) {
    return temperature_from_kinetic(kinetic_energy(velocities, masses),
                                    velocities.size(), n_constraints);
}

} // namespace admd
