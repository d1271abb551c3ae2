#ifndef ADMD_INTEGRATOR_HPP
#define ADMD_INTEGRATOR_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "admd/box.hpp"
#include "admd/rng.hpp"
#include "admd/vec.hpp"

namespace admd {

struct IntegratorParams {
    double dt = 0.001;              // ps
    double friction = 0.5;          // gamma, ps^-1, uniform over sites
    double ref_temperature = 323.0; // K
    std::uint64_t rng_seed = 0;
    bool thermostat_enabled = true;

    bool valid() const noexcept {
        return dt > 0.0 && friction >= 0.0 && ref_temperature >= 0.0;
    }
};

/// Raised when the forces fed to sd_step contain NaN/Inf; the message carries
/// a diagnostic dump of the first offending site.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kinetic energies bracketing the step: `pre` is taken from the incoming
/// velocities, `post` from the outgoing ones. On-step kinetic energy (for
/// temperature and total-energy reporting) is the average of the two
/// half-step values, the usual leapfrog convention.
struct SdStepEnergies {
    double kinetic_pre = 0.0;
    double kinetic_post = 0.0;

    double on_step() const { return 0.5 * (kinetic_pre + kinetic_post); }
};

/// One stochastic-dynamics step in leapfrog Langevin-impulse form:
/// half kick with the current forces, exact Ornstein-Uhlenbeck velocity
/// update (decay e^(-gamma dt), noise variance (1 - e^(-2 gamma dt)) kB T / m
/// per component), second half kick, then position drift and box wrap.
/// With gamma = 0 (or the thermostat disabled) the OU substep is skipped
/// entirely and the update is the deterministic velocity-Verlet/leapfrog.
///
/// The noise is drawn from the counter stream (seed, global site id,
/// step_index, component), so trajectories do not depend on how sites are
/// distributed over workers. `global_site_ids` may be empty when local index
/// == global id.
SdStepEnergies sd_step(std::span<Vec3> positions, std::span<Vec3> velocities,
                       std::span<const Vec3> forces, std::span<const double> masses,
                       std::span<const std::int64_t> global_site_ids, std::uint64_t step_index,
                       const IntegratorParams& params, const PeriodicBox& box);

} // namespace admd

#endif
