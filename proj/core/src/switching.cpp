#include "admd/switching.hpp"

#include <cassert>
#include <cmath>

#include "admd/units.hpp"

namespace admd {

double lambda(double x, const SwitchingGeometry& geom, const PeriodicBox& box) {
    assert(geom.valid());
    const double d = std::abs(minimum_image_x(x - geom.fg_center_x, box));
    if (d <= geom.fg_half_width) return 1.0;
    if (d >= geom.fg_half_width + geom.hybrid_width) return 0.0;
    const double u = (d - geom.fg_half_width) / geom.hybrid_width * (0.5 * units::pi);
    const double c = std::cos(u);
    return c * c;
}

double dlambda_dx(double x, const SwitchingGeometry& geom, const PeriodicBox& box) {
    assert(geom.valid());
    const double dx = minimum_image_x(x - geom.fg_center_x, box);
    const double d = std::abs(dx);
    if (d <= geom.fg_half_width) return 0.0;
    if (d >= geom.fg_half_width + geom.hybrid_width) return 0.0;
    const double L = geom.hybrid_width;
    const double u = (d - geom.fg_half_width) / L * (0.5 * units::pi);
    // d lambda / dd = -(pi/L) sin(u) cos(u); dd/dX = sign(dx)
    const double sign = dx > 0.0 ? 1.0 : -1.0;
    return -(units::pi / L) * std::sin(u) * std::cos(u) * sign;
}

Region classify_region(double x, const SwitchingGeometry& geom, const PeriodicBox& box) {
    const double d = std::abs(minimum_image_x(x - geom.fg_center_x, box));
    if (d <= geom.fg_half_width) return Region::fg;
    if (d >= geom.fg_half_width + geom.hybrid_width) return Region::cg;
    return Region::hybrid;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::fg: return "FG";
        case Region::hybrid: return "HY";
        case Region::cg: return "CG";
    }
    return "?";
}

} // namespace admd
