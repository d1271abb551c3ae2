#include "admd/sim_state.hpp"

namespace admd {

bool state_is_finite(const SimState& state) {
    for (const Vec3& p : state.positions)
        if (!is_finite(p)) return false;
    for (const Vec3& v : state.velocities)
        if (!is_finite(v)) return false;
    return true;
}

} // namespace admd
