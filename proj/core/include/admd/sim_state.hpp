#ifndef ADMD_SIM_STATE_HPP
#define ADMD_SIM_STATE_HPP

#include <vector>

#include "admd/vec.hpp"

namespace admd {

/// Positions and velocities of every FG site, ordered by global site id.
/// The CG bead view is derived from this on demand; it is never integrated.
struct SimState {
    std::vector<Vec3> positions;   // nm
    std::vector<Vec3> velocities;  // nm/ps

    std::size_t n_sites() const { return positions.size(); }
};

/// True when every component of every vector is finite.
bool state_is_finite(const SimState& state);

} // namespace admd

#endif
