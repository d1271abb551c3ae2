#include "admd/neighbor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace admd {

namespace {

struct CellGrid {
    int nx = 0, ny = 0, nz = 0;
    std::vector<std::int32_t> head;  // first site per cell, -1 empty
    std::vector<std::int32_t> next;  // linked list over sites

    int cell_of(const Vec3& wrapped, const PeriodicBox& box) const {
        int ix = static_cast<int>(wrapped.x / box.lx * nx);
        int iy = static_cast<int>(wrapped.y / box.ly * ny);
        int iz = static_cast<int>(wrapped.z / box.lz * nz);
        ix = std::min(ix, nx - 1);
        iy = std::min(iy, ny - 1);
        iz = std::min(iz, nz - 1);
        return (ix * ny + iy) * nz + iz;
    }
};

} // namespace

double max_displacement(std::span<const Vec3> current, std::span<const Vec3> reference,
                        const PeriodicBox& box) {
    assert(current.size() == reference.size());
    double worst2 = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i)
        worst2 = std::max(worst2, norm2(minimum_image(current[i] - reference[i], box)));
    return std::sqrt(worst2);
}

NeighborTable build_neighbor_table(std::span<const Vec3> positions,
                                   std::span<const std::int64_t> sort_keys,
                                   std::span<const std::int32_t> group_ids,
                                   const PeriodicBox& box, double range) {
    if (!(range > 0.0)) throw std::invalid_argument("neighbor range must be positive");
    const std::int32_t n = static_cast<std::int32_t>(positions.size());
    const double range2 = range * range;

    const auto group = [&](std::int32_t i) {
        return group_ids.empty() ? i : group_ids[std::size_t(i)];
    };
    const auto key = [&](std::int32_t i) {
        return sort_keys.empty() ? static_cast<std::int64_t>(i) : sort_keys[std::size_t(i)];
    };

    NeighborTable table;
    table.offsets.assign(std::size_t(n) + 1, 0);

    const int ncx = static_cast<int>(box.lx / range);
    const int ncy = static_cast<int>(box.ly / range);
    const int ncz = static_cast<int>(box.lz / range);
    const bool use_cells = ncx >= 3 && ncy >= 3 && ncz >= 3 && n > 16;

    std::vector<std::pair<std::int64_t, std::int32_t>> scratch;

    if (use_cells) {
        CellGrid grid;
        grid.nx = ncx;
        grid.ny = ncy;
        grid.nz = ncz;
        grid.head.assign(std::size_t(ncx) * ncy * ncz, -1);
        grid.next.assign(std::size_t(n), -1);

        std::vector<Vec3> wrapped(std::size_t(n));
        std::vector<std::int32_t> cell(std::size_t(n));
        for (std::int32_t i = 0; i < n; ++i) {
            wrapped[std::size_t(i)] = wrap_position(positions[std::size_t(i)], box);
            const int c = grid.cell_of(wrapped[std::size_t(i)], box);
            cell[std::size_t(i)] = c;
            grid.next[std::size_t(i)] = grid.head[std::size_t(c)];
            grid.head[std::size_t(c)] = i;
        }

        // Two passes: count, then fill.
        for (int pass = 0; pass < 2; ++pass) {
            if (pass == 1) {
                for (std::int32_t i = 0; i < n; ++i)
                    table.offsets[std::size_t(i) + 1] += table.offsets[std::size_t(i)];
                table.partners.resize(std::size_t(table.offsets[std::size_t(n)]));
            }
            std::vector<std::int32_t> cursor(pass == 1 ? table.offsets : std::vector<std::int32_t>{});

            for (std::int32_t a = 0; a < n; ++a) {
                const int ca = cell[std::size_t(a)];
                const int ax = ca / (ncy * ncz);
                const int ay = (ca / ncz) % ncy;
                const int az = ca % ncz;
                if (pass == 1) scratch.clear();
                std::int32_t count = 0;
                for (int dx = -1; dx <= 1; ++dx)
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dz = -1; dz <= 1; ++dz) {
                            const int bx = (ax + dx + ncx) % ncx;
                            const int by = (ay + dy + ncy) % ncy;
                            const int bz = (az + dz + ncz) % ncz;
                            const int cb = (bx * ncy + by) * ncz + bz;
                            for (std::int32_t b = grid.head[std::size_t(cb)]; b >= 0;
                                 b = grid.next[std::size_t(b)]) {
                                if (b == a || group(a) == group(b)) continue;
                                const Vec3 d = minimum_image(
                                    positions[std::size_t(a)] - positions[std::size_t(b)], box);
                                if (norm2(d) > range2) continue;
                                if (pass == 0)
                                    ++count;
                                else
                                    scratch.emplace_back(key(b), b);
                            }
                        }
                if (pass == 0) {
                    table.offsets[std::size_t(a) + 1] = count;
                } else {
                    std::sort(scratch.begin(), scratch.end());
                    std::int32_t at = cursor[std::size_t(a)];
                    for (const auto& [k, b] : scratch) table.partners[std::size_t(at++)] = b;
                }
            }
        }
    } else {
        std::vector<std::vector<std::pair<std::int64_t, std::int32_t>>> lists(std::size_t(n));
        for (std::int32_t a = 0; a < n; ++a)
            for (std::int32_t b = 0; b < n; ++b) {
                if (b == a || group(a) == group(b)) continue;
                const Vec3 d =
                    minimum_image(positions[std::size_t(a)] - positions[std::size_t(b)], box);
                if (norm2(d) > range2) continue;
                lists[std::size_t(a)].emplace_back(key(b), b);
            }
        for (std::int32_t a = 0; a < n; ++a) {
            std::sort(lists[std::size_t(a)].begin(), lists[std::size_t(a)].end());
            table.offsets[std::size_t(a) + 1] =
                table.offsets[std::size_t(a)] + static_cast<std::int32_t>(lists[std::size_t(a)].size());
        }
        table.partners.reserve(std::size_t(table.offsets[std::size_t(n)]));
        for (std::int32_t a = 0; a < n; ++a)
            for (const auto& [k, b] : lists[std::size_t(a)]) table.partners.push_back(b);
    }

    return table;
}

} // namespace admd
