#ifndef ADMD_SWITCHING_HPP
#define ADMD_SWITCHING_HPP

#include "admd/box.hpp"

namespace admd {

/// Slab geometry of the resolution regions along x. The fine-grained slab is
/// centered at fg_center_x with half width h = fg_half_width; a hybrid ramp
/// of width L = hybrid_width sits on both sides; everything beyond is
/// coarse-grained. Distances are periodic, so the CG region wraps through
/// the box boundary.
struct SwitchingGeometry {
    double fg_center_x = 0.0;  // X_m, nm
    double fg_half_width = 0.0;  // h, nm
    double hybrid_width = 0.0;  // L, nm

    bool valid() const noexcept { return fg_half_width >= 0.0 && hybrid_width > 0.0; }

    /// Both ramps plus the FG slab have to fit inside the box.
    bool fits(const PeriodicBox& box) const noexcept {
        return 2.0 * (fg_half_width + hybrid_width) <= box.lx;
    }
};

enum class Region { fg, hybrid, cg };

/// Resolution weight in [0, 1]: 1 in the FG slab, 0 in the CG region, and a
/// cos^2 ramp over the hybrid zone. Continuously differentiable everywhere.
double lambda(double x, const SwitchingGeometry& geom, const PeriodicBox& box);

/// Analytic d lambda / dX. Zero outside the open hybrid zone.
double dlambda_dx(double x, const SwitchingGeometry& geom, const PeriodicBox& box);

/// Region classification with both boundaries assigned to the closed
/// FG / CG sides (d == h is FG, d == h + L is CG).
Region classify_region(double x, const SwitchingGeometry& geom, const PeriodicBox& box);

const char* region_name(Region r);

} // namespace admd

#endif
