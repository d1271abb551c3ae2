#include "admd/integrator.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "admd/units.hpp"

namespace admd {

SdStepEnergies sd_step(std::span<Vec3> positions, std::span<Vec3> velocities,
                       std::span<const Vec3> forces, std::span<const double> masses,
                       std::span<const std::int64_t> global_site_ids, std::uint64_t step_index,
                       const IntegratorParams& params, const PeriodicBox& box) {
    assert(params.valid());
    assert(positions.size() == velocities.size());
    assert(positions.size() == forces.size());
    assert(positions.size() == masses.size());

    const std::size_t n = positions.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_finite(forces[i])) {
            const std::int64_t gid =
                global_site_ids.empty() ? static_cast<std::int64_t>(i) : global_site_ids[i];
            std::ostringstream msg;
            msg << "non-finite force at step " << step_index << ", site " << gid << ": f=("
                << forces[i].x << ", " << forces[i].y << ", " << forces[i].z << ") x=("
                << positions[i].x << ", " << positions[i].y << ", " << positions[i].z << ") v=("
                << velocities[i].x << ", " << velocities[i].y << ", " << velocities[i].z << ")";
            throw IntegrationError(msg.str());
        }
    }

    const double dt = params.dt;
    const bool stochastic = params.thermostat_enabled && params.friction > 0.0;
    const double decay = stochastic ? std::exp(-params.friction * dt) : 1.0;
    const double noise_scale2 =
        stochastic ? (1.0 - decay * decay) * units::k_boltzmann * params.ref_temperature : 0.0;

    SdStepEnergies energies;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = masses[i];
        Vec3 v = velocities[i];
        energies.kinetic_pre += 0.5 * m * norm2(v);

        const Vec3 kick = (0.5 * dt / m) * forces[i];
        v += kick;
        if (stochastic) {
            const std::int64_t gid =
                global_site_ids.empty() ? static_cast<std::int64_t>(i) : global_site_ids[i];
            const double sigma = std::sqrt(noise_scale2 / m);
            v.x = decay * v.x + sigma * rng_stream(params.rng_seed, std::uint64_t(gid), step_index, 0);
            v.y = decay * v.y + sigma * rng_stream(params.rng_seed, std::uint64_t(gid), step_index, 1);
            v.z = decay * v.z + sigma * rng_stream(params.rng_seed, std::uint64_t(gid), step_index, 2);
        }
        v += kick;

        energies.kinetic_post += 0.5 * m * norm2(v);
        velocities[i] = v;
        positions[i] = wrap_position(positions[i] + dt * v, box);
    }
    return energies;
}

} // namespace admd
