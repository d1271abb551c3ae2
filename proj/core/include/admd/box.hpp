#ifndef ADMD_BOX_HPP
#define ADMD_BOX_HPP

#include <cmath>

#include "admd/vec.hpp"

namespace admd {

/// Orthorhombic periodic box with edge lengths in nm.
struct PeriodicBox {
    double lx = 0.0;
    double ly = 0.0;
    double lz = 0.0;

    bool valid() const noexcept { return lx > 0.0 && ly > 0.0 && lz > 0.0; }
    double volume() const noexcept { return lx * ly * lz; }
};

namespace detail {
// Maps d into [-l/2, l/2). The half-box tie d == l/2 resolves to -l/2.
inline double wrap_component(double d, double l) noexcept {
    return d - l * std::floor(d / l + 0.5);
}
} // namespace detail

/// Shortest periodic image of a displacement; each component lands in [-L/2, L/2).
inline Vec3 minimum_image(const Vec3& d, const PeriodicBox& box) noexcept {
    return {detail::wrap_component(d.x, box.lx),
            detail::wrap_component(d.y, box.ly),
            detail::wrap_component(d.z, box.lz)};
}

/// Minimum-image convention applied to the x component only.
inline double minimum_image_x(double dx, const PeriodicBox& box) noexcept {
    return detail::wrap_component(dx, box.lx);
}

/// Wraps an absolute position into [0, L) per component.
inline Vec3 wrap_position(const Vec3& p, const PeriodicBox& box) noexcept {
    Vec3 w{p.x - box.lx * std::floor(p.x / box.lx),
           p.y - box.ly * std::floor(p.y / box.ly),
           p.z - box.lz * std::floor(p.z / box.lz)};
    // floor rounding can leave a component == L when p is a tiny negative number
    if (w.x >= box.lx) w.x = 0.0;
    if (w.y >= box.ly) w.y = 0.0;
    if (w.z >= box.lz) w.z = 0.0;
    return w;
}

} // namespace admd

#endif
